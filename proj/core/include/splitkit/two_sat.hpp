#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace splitkit {

/// Literal over variable `var`; `negated` selects ¬var.
struct Lit {
  std::size_t var = 0;
  bool negated = false;

  Lit operator~() const { return {var, !negated}; }
  friend bool operator==(const Lit&, const Lit&) = default;
};

inline Lit pos(std::size_t v) { return {v, false}; }
inline Lit neg(std::size_t v) { return {v, true}; }

/// CNF with clauses of at most two literals, solved through the implication
/// graph and its strongly connected components in O(variables + clauses).
class TwoSat {
 public:
  explicit TwoSat(std::size_t variables = 0) : vars_(variables) {}

  std::size_t variable_count() const { return vars_; }
  std::size_t clause_count() const { return clauses_.size() + units_.size(); }

  /// Grows the variable range to include `v`.
  void touch(std::size_t v) {
    if (v >= vars_) vars_ = v + 1;
  }
  void add_clause(Lit a, Lit b);
  void add_unit(Lit a);
  /// The empty clause; the instance becomes unsatisfiable.
  void add_false() { has_false_ = true; }

  /// A satisfying assignment indexed by variable, or nothing.
  std::optional<std::vector<bool>> solve() const;

 private:
  std::size_t vars_;
  std::vector<std::pair<Lit, Lit>> clauses_;
  std::vector<Lit> units_;
  bool has_false_ = false;
};

}  // namespace splitkit
