#include "splitkit/properties.hpp"

#include <deque>

#include "splitkit/dense.hpp"
#include "splitkit/error.hpp"

namespace splitkit {

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (Vertex a : g.vertices()) {
    const VertexSet& na = g.neighbors(a);
    for (auto ib = na.upper_bound(a); ib != na.end(); ++ib)
      for (auto ic = std::next(ib); ic != na.end(); ++ic)
        if (g.adjacent(*ib, *ic)) out.push_back({a, *ib, *ic});
  }
  return out;
}

bool is_bipartite(const Graph& g) {
  std::map<Vertex, int> side;
  for (Vertex s : g.vertices()) {
    if (side.count(s)) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        auto it = side.find(w);
        if (it == side.end()) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (it->second == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::map<Vertex, std::size_t> distances_from(const Graph& g, Vertex source) {
  std::map<Vertex, std::size_t> dist;
  if (!g.has_vertex(source)) return dist;
  dist[source] = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v))
      if (dist.emplace(w, dist[v] + 1).second) queue.push_back(w);
  }
  return dist;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (Vertex v : g.vertices()) {
    if (seen.count(v)) continue;
    VertexSet comp;
    for (const auto& [w, _] : distances_from(g, v)) comp.insert(w);
    seen.insert(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  auto dist = distances_from(g, u);
  auto it = dist.find(v);
  if (it == dist.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v : g.vertices()) {
    auto dist = distances_from(g, v);
    if (dist.size() != g.vertex_count()) return std::nullopt;
    for (const auto& [_, d] : dist) best = std::max(best, d);
  }
  return best;
}

namespace {

bool connected_after_removal(const DenseGraph& d, Mask removed) {
  Mask rest = d.all() & ~removed;
  if (popcount(rest) <= 1) return true;
  Mask seen = bit(lowest(rest)), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= d.adj[lowest(m)] & rest;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == rest;
}

}  // namespace

std::size_t connectivity(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap) throw CapExceeded("connectivity", n, cap);
  if (n <= 1) return 0;
  DenseGraph d = to_dense(g);
  // smallest separator size; only sets leaving at least two vertices can disconnect
  for (std::size_t s = 0; s + 2 <= n; ++s)
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      if (static_cast<std::size_t>(popcount(m)) == s && !connected_after_removal(d, m)) return s;
  return n - 1;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (auto it = s.begin(); it != s.end(); ++it)
    for (auto jt = std::next(it); jt != s.end(); ++jt)
      if (!g.adjacent(*it, *jt)) return false;
  return true;
}

}  // namespace splitkit
