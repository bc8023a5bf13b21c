#include "splitkit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "splitkit/error.hpp"

namespace splitkit {

Graph complete_graph(std::size_t n) {
  Graph g = Graph::with_vertices(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g = Graph::with_vertices(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(static_cast<Vertex>(n - 1), 0);
  return g;
}

Graph edgeless_graph(std::size_t n) { return Graph::with_vertices(n); }

Graph named_graph(std::string_view name, std::size_t n) {
  if (name.substr(0, 3) == "co-") return named_graph(name.substr(3), n).complement();
  if (name == "K") return complete_graph(n);
  if (n == 0) throw Error("only K accepts n = 0");
  if (name == "P") return path_graph(n);
  if (name == "C") return cycle_graph(n);
  if (name == "E") return edgeless_graph(n);
  if (name == "claw" || name == "star") {
    if (n < 2) throw Error("claw needs at least 2 vertices");
    Graph g = Graph::with_vertices(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
  }
  throw Error("unknown graph name '" + std::string(name) + "'");
}

namespace {

Graph single_pattern(std::string_view tok) {
  if (tok.substr(0, 2) == "co" && tok.size() > 2) return single_pattern(tok.substr(2)).complement();
  if (tok == "claw") return named_graph("claw", 4);
  if (tok == "paw") {
    Graph g = complete_graph(3);
    g.add_edge(0, 3);
    return g;
  }
  if (tok == "diamond") {
    Graph g = complete_graph(4);
    g.remove_edge(2, 3);
    return g;
  }
  if (tok.size() >= 2 && std::isalpha(static_cast<unsigned char>(tok[0]))) {
    std::string letter(1, tok[0]);
    std::string digits(tok.substr(1));
    if (std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      return named_graph(letter, std::stoul(digits));
  }
  throw Error("unknown pattern '" + std::string(tok) + "'");
}

}  // namespace

Graph pattern_graph(std::string_view token) {
  Graph out;
  std::size_t start = 0;
  bool first = true;
  while (start <= token.size()) {
    std::size_t plus = token.find('+', start);
    std::string_view part = token.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    if (part.empty()) throw Error("empty term in pattern '" + std::string(token) + "'");
    Graph g = single_pattern(part);
    out = first ? g : disjoint_union(out, g);
    first = false;
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return out;
}

Graph overlapping_cliques(std::size_t p, std::size_t shared) {
  if (shared > p) throw Error("shared part larger than the cliques");
  std::size_t n = 2 * p - shared;
  Graph g = Graph::with_vertices(n);
  for (Vertex u = 0; u < p; ++u)
    for (Vertex v = u + 1; v < p; ++v) g.add_edge(u, v);
  // second clique: the last `shared` vertices of the first plus p - shared fresh ones
  std::vector<Vertex> second;
  for (std::size_t i = p - shared; i < n; ++i) second.push_back(static_cast<Vertex>(i));
  for (std::size_t i = 0; i < second.size(); ++i)
    for (std::size_t j = i + 1; j < second.size(); ++j) g.add_edge(second[i], second[j]);
  return g;
}

namespace {

Graph generalized_petersen(std::size_t n, std::size_t k) {
  Graph g = Graph::with_vertices(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(n + i));
    g.add_edge(static_cast<Vertex>(n + i), static_cast<Vertex>(n + (i + k) % n));
  }
  return g;
}

}  // namespace

Graph cubic_graph(std::string_view name) {
  if (name == "K4") return complete_graph(4);
  if (name == "K33") {
    Graph g = Graph::with_vertices(6);
    for (Vertex u = 0; u < 3; ++u)
      for (Vertex v = 3; v < 6; ++v) g.add_edge(u, v);
    return g;
  }
  if (name == "prism") return generalized_petersen(3, 1);
  if (name == "petersen") return generalized_petersen(5, 2);
  if (name == "mobius-kantor") return generalized_petersen(8, 3);
  throw Error("unknown cubic graph '" + std::string(name) + "'");
}

std::vector<std::string> cubic_graph_names() { return {"K4", "K33", "prism", "petersen", "mobius-kantor"}; }

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw Error("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g = Graph::with_vertices(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v);
  return g;
}

Graph random_graph_m(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  if (m > pairs.size()) throw Error("too many edges requested");
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(m);
  return Graph::from_edges(n, pairs);
}

Subdivision subdivide_with_paths(const Graph& g, std::size_t t) {
  Subdivision out;
  if (t == 0) {
    out.graph = g;
    for (const Edge& e : g.edges()) out.paths[e] = {};
    return out;
  }
  for (Vertex v : g.vertices()) out.graph.add_vertex(v);
  Vertex next = g.next_free_id();
  for (const Edge& e : g.edges()) {
    std::vector<Vertex> inner;
    Vertex prev = e.first;
    for (std::size_t i = 0; i < t; ++i) {
      inner.push_back(next);
      out.graph.add_edge(prev, next);
      prev = next++;
    }
    out.graph.add_edge(prev, e.second);
    out.paths[e] = std::move(inner);
  }
  return out;
}

Graph subdivide(const Graph& g, std::size_t t) { return subdivide_with_paths(g, t).graph; }

bool is_regular(const Graph& g, std::size_t d) {
  for (Vertex v : g.vertices())
    if (g.degree(v) != d) return false;
  return true;
}

}  // namespace splitkit
