#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "splitkit/graph.hpp"

namespace splitkit {

using Triangle = std::array<Vertex, 3>;

/// Every triangle once, as (a, b, c) with a < b < c, in lexicographic order.
std::vector<Triangle> triangles(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

/// BFS distances from `source` to every reachable vertex.
std::map<Vertex, std::size_t> distances_from(const Graph& g, Vertex source);
/// Absent when u and v lie in different components.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);
/// Absent for disconnected graphs; 0 for graphs with at most one vertex.
std::optional<std::size_t> diameter(const Graph& g);

inline constexpr std::size_t kConnectivityCap = 12;

/// Vertex connectivity by exhaustive separator search (n-1 for complete graphs).
std::size_t connectivity(const Graph& g, std::size_t cap = kConnectivityCap);

bool is_clique(const Graph& g, const VertexSet& s);

}  // namespace splitkit
