#pragma once

#include <vector>

#include "splitkit/dense.hpp"
#include "splitkit/embedding.hpp"
#include "splitkit/graph.hpp"

namespace splitkit {

enum class FamilyKind { finite, odd_cycles, odd_holes_antiholes };

/// A set of forbidden graphs: either an explicit list matched in one mode, or
/// one of the two infinite families handled by dedicated tests.
///
/// Odd cycles are matched the same way in both modes (a shortest odd cycle is
/// always induced). Odd holes and antiholes are always matched as induced subgraphs.
class ForbiddenFamily {
 public:
  static constexpr std::size_t kDefaultPerfectCap = 14;

  static ForbiddenFamily finite(std::vector<Graph> patterns, EmbedMode mode = EmbedMode::induced);
  static ForbiddenFamily odd_cycles();
  static ForbiddenFamily odd_holes_antiholes(std::size_t cap = kDefaultPerfectCap);

  FamilyKind kind() const { return kind_; }
  EmbedMode mode() const { return mode_; }
  const std::vector<Graph>& patterns() const { return patterns_; }
  const std::vector<DenseGraph>& dense_patterns() const { return dense_; }
  std::size_t perfect_cap() const { return perfect_cap_; }

  /// K0 is a member: every graph contains it.
  bool forbids_empty_graph() const;

 private:
  FamilyKind kind_ = FamilyKind::finite;
  EmbedMode mode_ = EmbedMode::induced;
  std::vector<Graph> patterns_;
  std::vector<DenseGraph> dense_;
  std::size_t perfect_cap_ = kDefaultPerfectCap;
};

/// No member of the family embeds into `host`. Throws CapExceeded for the
/// odd-hole check above the family's cap.
bool is_free(const Graph& host, const ForbiddenFamily& family);
bool is_free(const DenseGraph& host, const ForbiddenFamily& family);

}  // namespace splitkit
