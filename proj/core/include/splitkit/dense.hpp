#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "splitkit/graph.hpp"

namespace splitkit {

using Mask = std::uint64_t;
inline constexpr std::size_t kDenseLimit = 64;

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }
inline std::size_t lowest(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

/// Bitmask adjacency over positions 0..n-1 with an optional color per position.
/// Used by the search code; ids live in a side table kept by the caller.
struct DenseGraph {
  std::vector<Mask> adj;
  std::vector<std::uint8_t> color;

  DenseGraph() = default;
  explicit DenseGraph(std::size_t n) : adj(n, 0), color(n, 0) {}

  std::size_t size() const { return adj.size(); }
  Mask all() const { return adj.size() == 64 ? ~Mask{0} : bit(adj.size()) - 1; }
  bool adjacent(std::size_t i, std::size_t j) const { return (adj[i] >> j) & 1u; }
  int degree(std::size_t i) const { return popcount(adj[i]); }
  void add_edge(std::size_t i, std::size_t j) {
    adj[i] |= bit(j);
    adj[j] |= bit(i);
  }
  std::size_t edge_count() const;
  DenseGraph complement() const;
  DenseGraph induced(Mask keep) const;

  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;
};

/// Positions follow ascending id order; `ids` (if given) receives the id of each position.
/// Throws CapExceeded beyond 64 vertices.
DenseGraph to_dense(const Graph& g, std::vector<Vertex>* ids = nullptr);
/// Inverse of to_dense; position i gets id `ids[i]` (or i when ids is empty).
Graph from_dense(const DenseGraph& d, const std::vector<Vertex>& ids = {});

/// True if `pattern` embeds into `host` (induced when `induced` is set).
bool dense_contains(const DenseGraph& pattern, const DenseGraph& host, bool induced);

/// Two-colorability.
bool dense_bipartite(const DenseGraph& g);

/// True if some induced subgraph is an odd cycle of length >= 5 or its complement.
/// Exponential in the vertex count; callers enforce a cap.
bool dense_has_odd_hole_or_antihole(const DenseGraph& g);

}  // namespace splitkit
