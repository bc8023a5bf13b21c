#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "splitkit/dense.hpp"
#include "splitkit/graph.hpp"

namespace splitkit {

/// Replace `target` by `child1` (adjacent to part1) and `child2` (adjacent to part2).
struct SplitSpec {
  Vertex target = 0;
  VertexSet part1;
  VertexSet part2;
  Vertex child1 = 0;
  Vertex child2 = 0;

  bool disjoint() const;
  bool trivial() const { return part1.empty() || part2.empty(); }

  friend auto operator<=>(const SplitSpec&, const SplitSpec&) = default;
};

/// Throws InvalidSplit unless `s` applies to `g`.
void check_split(const Graph& g, const SplitSpec& s);
Graph apply_split(const Graph& g, const SplitSpec& s);
/// Splits in place; same checks as apply_split.
void split_in_place(Graph& g, const SplitSpec& s);

/// Replaces non-adjacent u and v by the fresh vertex `g.next_free_id()`
/// adjacent to N(u) ∪ N(v).
Graph merge(const Graph& g, Vertex u, Vertex v);

enum class SplitPolicy { all, disjoint, nontrivial, disjoint_nontrivial };

/// Neighbour assignments as (part1, part2) bitmasks over positions 0..degree-1.
///
/// The unordered pair {part1, part2} is listed once: at the first position
/// whose membership differs, part1 holds that position. The trivial split
/// (part1 = everything) is kept unless the policy says nontrivial.
/// Counts: all -> (3^d + 1) / 2, disjoint -> 2^(d-1) (1 when d = 0), minus one
/// for the nontrivial policies.
const std::vector<std::pair<Mask, Mask>>& split_assignments(std::size_t degree, SplitPolicy policy);

/// One SplitSpec per assignment, children `g.next_free_id()` and the id after it.
std::vector<SplitSpec> enumerate_splits(const Graph& g, Vertex v, SplitPolicy policy);

/// Splits applied in order to an initial graph, with ancestry tracking.
class SplittingSequence {
 public:
  SplittingSequence() = default;
  explicit SplittingSequence(Graph initial);
  SplittingSequence(Graph initial, const std::vector<SplitSpec>& steps);

  /// Validates against the current graph; throws SequenceError with the step index.
  void push(const SplitSpec& s);

  const Graph& initial() const { return initial_; }
  const Graph& current() const { return current_; }
  const std::vector<SplitSpec>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  /// Graph after the first `i` steps.
  Graph graph_at(std::size_t i) const;

  /// Vertex of the initial graph this vertex descends from (itself for initial vertices).
  Vertex ancestor(Vertex v) const;
  /// Vertex this one was split from (itself for initial vertices).
  Vertex parent(Vertex v) const;
  /// Reflexive and transitive.
  bool descends_from(Vertex d, Vertex a) const;
  /// Descendants of `a` present in the current graph.
  VertexSet current_descendants(Vertex a) const;
  /// Edges of the current graph whose endpoints descend from the two endpoints of `e`.
  std::set<Edge> descendant_edges(const Edge& e) const;

  bool all_disjoint() const;
  /// Every initial vertex has at most one split among its descendants.
  bool shallow() const;
  /// Number of splits per initial vertex.
  std::map<Vertex, std::size_t> split_counts() const;

 private:
  Graph initial_;
  Graph current_;
  std::vector<SplitSpec> steps_;
  std::map<Vertex, Vertex> parent_;
};

Graph apply_sequence(const Graph& initial, const std::vector<SplitSpec>& steps);
Graph apply_sequence(const SplittingSequence& seq);

}  // namespace splitkit
