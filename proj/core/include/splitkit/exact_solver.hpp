#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitkit/canonical.hpp"
#include "splitkit/family.hpp"
#include "splitkit/split.hpp"

namespace splitkit {

/// Move set of the search.
/// general: any split. disjoint: disjoint splits only.
/// shallow: disjoint splits, and no vertex of the input has two splits among its descendants.
enum class SolveMode { general, disjoint, shallow };

const char* to_string(SolveMode m);
SolveMode parse_solve_mode(const std::string& s);

struct SolverOptions {
  SolveMode mode = SolveMode::general;
  /// Bound on |V(g)| + k, i.e. on the vertex count of the largest graph searched.
  std::size_t cap = kCanonicalCap;
  /// Trivial splits only add an isolated vertex, so they are skipped unless requested.
  bool allow_trivial = false;
};

struct SolveStats {
  std::size_t expanded = 0;
  std::size_t generated = 0;
  std::size_t duplicates = 0;
};

/// Breadth-first search over split sequences with isomorphism dedup per layer.
/// Returns a shortest sequence of at most k splits whose final graph is free of
/// the family, or nothing. Throws CapExceeded when |V(g)| + k exceeds the cap.
std::optional<SplittingSequence> solve(const Graph& g, const ForbiddenFamily& family, std::size_t k,
                                       const SolverOptions& options = {}, SolveStats* stats = nullptr);

/// Length of a shortest certificate, if one of length <= k_max exists.
std::optional<std::size_t> min_splits(const Graph& g, const ForbiddenFamily& family, std::size_t k_max,
                                      const SolverOptions& options = {});

struct Verdict {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Checks that `steps` replay on g, use at most k splits, respect `mode`, and end
/// in a family-free graph. The reason names the first violated condition
/// ("budget", "step i: ...", "mode", "not free").
Verdict verify_certificate(const Graph& g, const std::vector<SplitSpec>& steps, const ForbiddenFamily& family,
                           std::size_t k, SolveMode mode = SolveMode::general);
Verdict verify_certificate(const SplittingSequence& seq, const ForbiddenFamily& family, std::size_t k,
                           SolveMode mode = SolveMode::general);

}  // namespace splitkit
