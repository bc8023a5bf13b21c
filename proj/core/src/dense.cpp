#include "splitkit/dense.hpp"

#include <algorithm>

#include "splitkit/error.hpp"

namespace splitkit {

std::size_t DenseGraph::edge_count() const {
  std::size_t twice = 0;
  for (Mask m : adj) twice += static_cast<std::size_t>(popcount(m));
  return twice / 2;
}

DenseGraph DenseGraph::complement() const {
  DenseGraph out = *this;
  Mask full = all();
  for (std::size_t i = 0; i < size(); ++i) out.adj[i] = full & ~adj[i] & ~bit(i);
  return out;
}

DenseGraph DenseGraph::induced(Mask keep) const {
  std::vector<std::size_t> pos;
  for (Mask m = keep; m; m &= m - 1) pos.push_back(lowest(m));
  DenseGraph out(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    out.color[i] = color[pos[i]];
    for (std::size_t j = i + 1; j < pos.size(); ++j)
      if (adjacent(pos[i], pos[j])) out.add_edge(i, j);
  }
  return out;
}

DenseGraph to_dense(const Graph& g, std::vector<Vertex>* ids) {
  if (g.vertex_count() > kDenseLimit) throw CapExceeded("dense representation", g.vertex_count(), kDenseLimit);
  std::vector<Vertex> order = g.vertices();
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  DenseGraph d(order.size());
  for (const Edge& e : g.edges()) d.add_edge(index[e.first], index[e.second]);
  if (ids) *ids = std::move(order);
  return d;
}

Graph from_dense(const DenseGraph& d, const std::vector<Vertex>& ids) {
  auto id = [&](std::size_t i) { return ids.empty() ? static_cast<Vertex>(i) : ids[i]; };
  Graph g;
  for (std::size_t i = 0; i < d.size(); ++i) g.add_vertex(id(i));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (Mask m = d.adj[i] & (i + 1 < kDenseLimit ? ~(bit(i + 1) - 1) : 0); m; m &= m - 1)
      g.add_edge(id(i), id(lowest(m)));
  return g;
}

namespace {

// Pattern vertices ordered so that each one (after the first of its component)
// has an already placed neighbour, which keeps candidate masks small.
std::vector<std::size_t> match_order(const DenseGraph& p) {
  std::vector<std::size_t> order;
  Mask placed = 0;
  while (order.size() < p.size()) {
    std::size_t best = p.size();
    int best_links = -1, best_deg = -1;
    for (std::size_t v = 0; v < p.size(); ++v) {
      if (placed & bit(v)) continue;
      int links = popcount(p.adj[v] & placed);
      int deg = p.degree(v);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

struct Matcher {
  const DenseGraph& p;
  const DenseGraph& h;
  bool induced;
  std::vector<std::size_t> order;
  std::vector<std::size_t> image;

  bool extend(std::size_t depth, Mask used) {
    if (depth == order.size()) return true;
    std::size_t pv = order[depth];
    Mask cand = h.all() & ~used;
    for (std::size_t d = 0; d < depth; ++d) {
      std::size_t q = order[d];
      if (p.adjacent(pv, q))
        cand &= h.adj[image[q]];
      else if (induced)
        cand &= ~h.adj[image[q]];
    }
    int need = p.degree(pv);
    for (; cand; cand &= cand - 1) {
      std::size_t hv = lowest(cand);
      if (h.degree(hv) < need) continue;
      image[pv] = hv;
      if (extend(depth + 1, used | bit(hv))) return true;
    }
    return false;
  }
};

}  // namespace

bool dense_contains(const DenseGraph& pattern, const DenseGraph& host, bool induced) {
  if (pattern.size() > host.size()) return false;
  if (pattern.edge_count() > host.edge_count()) return false;
  Matcher m{pattern, host, induced, match_order(pattern), std::vector<std::size_t>(pattern.size())};
  return m.extend(0, 0);
}

bool dense_bipartite(const DenseGraph& g) {
  std::vector<int> side(g.size(), -1);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (Mask m = g.adj[v]; m; m &= m - 1) {
        std::size_t w = lowest(m);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

bool induces_cycle(const DenseGraph& g, Mask s) {
  for (Mask m = s; m; m &= m - 1)
    if (popcount(g.adj[lowest(m)] & s) != 2) return false;
  // 2-regular: a single cycle iff connected
  Mask seen = bit(lowest(s)), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= g.adj[lowest(m)] & s;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

}  // namespace

bool dense_has_odd_hole_or_antihole(const DenseGraph& g) {
  const std::size_t n = g.size();
  if (n < 5) return false;
  if (n >= 63) throw CapExceeded("odd hole enumeration", n, 62);
  DenseGraph co = g.complement();
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    int c = popcount(s);
    if (c < 5 || c % 2 == 0) continue;
    if (induces_cycle(g, s) || induces_cycle(co, s)) return true;
  }
  return false;
}

}  // namespace splitkit
