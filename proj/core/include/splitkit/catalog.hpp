#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "splitkit/graph.hpp"

namespace splitkit {

/// Standard graphs on ids 0..n-1.
///
/// Names: `K` (complete, n=0 allowed), `P` (path), `C` (cycle, n>=3),
/// `E` (edgeless), `claw` (K_{1,n-1} with center 0, n>=2), `star` (alias of claw).
/// A `co-` prefix returns the complement, e.g. `named_graph("co-P", 3)`.
Graph named_graph(std::string_view name, std::size_t n);

/// Parses a pattern token such as `K3`, `P4`, `C5`, `coP3`, `claw`, `paw`,
/// `diamond`, or a disjoint union written with `+` (e.g. `K2+K1`).
Graph pattern_graph(std::string_view token);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph edgeless_graph(std::size_t n);

/// Two copies of K_p sharing `shared` vertices.
Graph overlapping_cliques(std::size_t p, std::size_t shared);

/// Cubic graphs: `K4`, `K33`, `prism`, `petersen`, `mobius-kantor`.
Graph cubic_graph(std::string_view name);
std::vector<std::string> cubic_graph_names();

/// G(n, p) on ids 0..n-1, deterministic for a given seed.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);
/// Uniform graph with exactly m edges.
Graph random_graph_m(std::size_t n, std::size_t m, std::uint64_t seed);

/// Replaces each edge by a path with `t` new internal vertices.
/// `paths[e]` lists the internal vertices from e.first to e.second.
struct Subdivision {
  Graph graph;
  std::map<Edge, std::vector<Vertex>> paths;
};
Subdivision subdivide_with_paths(const Graph& g, std::size_t t);
Graph subdivide(const Graph& g, std::size_t t);

bool is_regular(const Graph& g, std::size_t d);

}  // namespace splitkit
