#include "splitkit/small_families.hpp"

#include <algorithm>
#include <functional>

#include "splitkit/canonical.hpp"
#include "splitkit/catalog.hpp"
#include "splitkit/error.hpp"
#include "splitkit/properties.hpp"

namespace splitkit {

Graph small_graph(SmallGraph s) {
  switch (s) {
    case SmallGraph::K0: return complete_graph(0);
    case SmallGraph::K1: return complete_graph(1);
    case SmallGraph::K2: return complete_graph(2);
    case SmallGraph::coK2: return edgeless_graph(2);
    case SmallGraph::K3: return complete_graph(3);
    case SmallGraph::coK3: return edgeless_graph(3);
    case SmallGraph::P3: return path_graph(3);
    case SmallGraph::coP3: return path_graph(3).complement();
  }
  throw Error("bad small graph");
}

std::string to_string(SmallGraph s) {
  static const char* names[] = {"K0", "K1", "K2", "coK2", "K3", "coK3", "P3", "coP3"};
  return names[static_cast<unsigned>(s)];
}

SmallFamily::SmallFamily(std::initializer_list<SmallGraph> members) {
  for (SmallGraph s : members) insert(s);
}

SmallFamily SmallFamily::from_bits(std::uint8_t bits) {
  SmallFamily f;
  f.bits_ = bits;
  return f;
}

ForbiddenFamily SmallFamily::forbidden() const {
  std::vector<Graph> patterns;
  for (SmallGraph s : kSmallGraphs)
    if (has(s)) patterns.push_back(small_graph(s));
  return ForbiddenFamily::finite(std::move(patterns), EmbedMode::induced);
}

std::string SmallFamily::to_string() const {
  std::string out = "{";
  for (SmallGraph s : kSmallGraphs) {
    if (!has(s)) continue;
    if (out.size() > 1) out += ',';
    out += splitkit::to_string(s);
  }
  return out + "}";
}

bool as_small_family(const ForbiddenFamily& f, SmallFamily& out) {
  if (f.kind() != FamilyKind::finite || f.mode() != EmbedMode::induced) return false;
  SmallFamily result;
  for (const Graph& p : f.patterns()) {
    if (p.vertex_count() > 3) return false;
    bool matched = false;
    for (SmallGraph s : kSmallGraphs) {
      if (isomorphic(p, small_graph(s))) {
        result.insert(s);
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  out = result;
  return true;
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::np_hard: return "np-hard";
  }
  return "?";
}

std::string to_string(Route r) {
  switch (r) {
    case Route::forbids_k0: return "forbids-K0";
    case Route::forbids_k1: return "forbids-K1";
    case Route::forbids_k2: return "forbids-K2";
    case Route::forbids_co_k2: return "forbids-coK2";
    case Route::empty_family: return "empty-family";
    case Route::np_hard_case: return "np-hard-case";
    case Route::indestructible: return "indestructible-members";
    case Route::co_p3_introduction: return "coP3-introduction";
    case Route::ramsey: return "ramsey";
    case Route::p3_k3_count: return "P3-K3-edge-count";
    case Route::p3_co_k3_midpoints: return "P3-coK3-midpoints";
  }
  return "?";
}

namespace {

Decision decide(bool b) { return b ? Decision::yes : Decision::no; }

bool contains_small(const Graph& g, SmallGraph s) { return embeds(small_graph(s), g, EmbedMode::induced); }

}  // namespace

DispatchResult dispatch(const SmallFamily& family, const Graph& g, std::size_t k) {
  using S = SmallGraph;
  const ForbiddenFamily forbidden = family.forbidden();
  auto recognize = [&](Route r) { return DispatchResult{decide(is_free(g, forbidden)), r}; };

  // The empty graph embeds into every graph.
  if (family.has(S::K0)) return {Decision::no, Route::forbids_k0};
  // Splits never remove vertices, edges, or non-edges; splitting an edgeless or
  // one-vertex graph only adds isolated vertices, and splitting inside a clique
  // creates a non-edge. In each case (G, k) behaves like (G, 0).
  if (family.has(S::K1)) return g.empty() ? recognize(Route::forbids_k1) : DispatchResult{Decision::no, Route::forbids_k1};
  if (family.has(S::K2))
    return g.edge_count() > 0 ? DispatchResult{Decision::no, Route::forbids_k2} : recognize(Route::forbids_k2);
  if (family.has(S::coK2))
    return contains_small(g, S::coK2) ? DispatchResult{Decision::no, Route::forbids_co_k2} : recognize(Route::forbids_co_k2);

  const bool k3 = family.has(S::K3), co_k3 = family.has(S::coK3), p3 = family.has(S::P3), co_p3 = family.has(S::coP3);
  if (family.empty()) return {Decision::yes, Route::empty_family};
  if (family == SmallFamily{S::K3} || family == SmallFamily{S::P3}) return {Decision::np_hard, Route::np_hard_case};
  if (!k3 && !p3) return recognize(Route::indestructible);
  if (k3 && co_k3) return {decide(solve_ramsey_k3(g, k, family)), Route::ramsey};
  if (co_p3) return recognize(Route::co_p3_introduction);
  if (k3 && p3) return {decide(solve_p3_k3(g, k)), Route::p3_k3_count};
  // remaining: {coK3, P3}
  return {decide(solve_p3_co_k3(g, k)), Route::p3_co_k3_midpoints};
}

std::size_t p3_k3_threshold(const Graph& g) {
  return 2 * g.edge_count() + g.isolated_vertices().size() - g.vertex_count();
}

bool solve_p3_k3(const Graph& g, std::size_t k) { return k >= p3_k3_threshold(g); }

SplittingSequence p3_k3_certificate(const Graph& g) {
  // Peel one neighbour off a vertex of degree >= 2 until every vertex has degree <= 1;
  // each step keeps |E| and the isolated vertices.
  SplittingSequence seq(g);
  while (true) {
    const Graph& cur = seq.current();
    auto vs = cur.vertices();
    auto it = std::find_if(vs.begin(), vs.end(), [&](Vertex v) { return cur.degree(v) >= 2; });
    if (it == vs.end()) break;
    const VertexSet& nbrs = cur.neighbors(*it);
    SplitSpec s;
    s.target = *it;
    s.part1 = {*nbrs.begin()};
    s.part2 = VertexSet(std::next(nbrs.begin()), nbrs.end());
    s.child1 = cur.next_free_id();
    s.child2 = s.child1 + 1;
    seq.push(s);
  }
  return seq;
}

VertexSet midpoints(const Graph& g) {
  VertexSet out;
  for (Vertex v : g.vertices()) {
    const VertexSet& n = g.neighbors(v);
    bool mid = false;
    for (auto a = n.begin(); a != n.end() && !mid; ++a)
      for (auto b = std::next(a); b != n.end() && !mid; ++b)
        if (!g.adjacent(*a, *b)) mid = true;
    if (mid) out.insert(v);
  }
  return out;
}

bool midpoint_rule_p3_co_k3(const Graph& g, std::size_t k) {
  if (contains_small(g, SmallGraph::coK3)) return false;
  if (!contains_small(g, SmallGraph::P3)) return true;
  VertexSet m = midpoints(g);
  // m is non-empty here: every induced P3 has a midpoint
  return is_clique(g, m) && m.size() <= k;
}

bool solve_p3_co_k3(const Graph& g, std::size_t k) {
  if (!midpoint_rule_p3_co_k3(g, k)) return false;
  if (!contains_small(g, SmallGraph::P3)) return true;
  // A clique of midpoints is not enough (P4 passes the rule above). The yes
  // instances are exactly the unions of two incomparable cliques, whose
  // intersection is then the midpoint set, so rebuild that cover and check it.
  const VertexSet m = midpoints(g);
  VertexSet rest;
  for (Vertex v : g.vertices())
    if (!m.count(v)) rest.insert(v);
  const auto parts = components(g.induced(rest));
  if (parts.size() != 2) return false;
  CliqueCover cover = {parts[0], parts[1]};
  for (VertexSet& c : cover) c.insert(m.begin(), m.end());
  return verify_scc(g, cover);
}

std::size_t scc_weight(const CliqueCover& cover) {
  std::size_t w = 0;
  for (const VertexSet& c : cover) w += c.size();
  return w;
}

bool verify_scc(const Graph& g, const CliqueCover& cover) {
  for (const VertexSet& c : cover) {
    for (Vertex v : c)
      if (!g.has_vertex(v)) return false;
    if (!is_clique(g, c)) return false;
  }
  for (const Edge& e : g.edges()) {
    bool covered = std::any_of(cover.begin(), cover.end(),
                               [&](const VertexSet& c) { return c.count(e.first) && c.count(e.second); });
    if (!covered) return false;
  }
  return true;
}

namespace {

// Minimum weight edge cover by cliques. Branches on the first uncovered edge over
// every clique containing it, largest cliques first.
class SccSearch {
 public:
  explicit SccSearch(const Graph& g) : dense_(to_dense(g, &ids_)) {
    const std::size_t n = dense_.size();
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
      if (popcount(s) < 2) continue;
      bool clique = true;
      for (Mask m = s; m && clique; m &= m - 1)
        if (s & ~(dense_.adj[lowest(m)] | bit(lowest(m)))) clique = false;
      if (clique) cliques_.push_back(s);
    }
    std::stable_sort(cliques_.begin(), cliques_.end(), [](Mask a, Mask b) { return popcount(a) > popcount(b); });
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (dense_.adjacent(i, j)) edges_.emplace_back(i, j);
  }

  CliqueCover run() {
    best_weight_ = 0;
    for (std::size_t i = 0; i < dense_.size(); ++i)
      if (dense_.degree(i) > 0) best_weight_ += static_cast<std::size_t>(dense_.degree(i)) + 1;  // loose upper bound
    ++best_weight_;
    std::vector<Mask> chosen;
    recurse(chosen, 0);
    CliqueCover out;
    for (Mask c : best_) {
      VertexSet s;
      for (Mask m = c; m; m &= m - 1) s.insert(ids_[lowest(m)]);
      out.push_back(std::move(s));
    }
    return out;
  }

 private:
  bool covered(const std::vector<Mask>& chosen, std::size_t e) const {
    Mask pair = bit(edges_[e].first) | bit(edges_[e].second);
    return std::any_of(chosen.begin(), chosen.end(), [&](Mask c) { return (c & pair) == pair; });
  }

  void recurse(std::vector<Mask>& chosen, std::size_t weight) {
    std::size_t e = 0;
    while (e < edges_.size() && covered(chosen, e)) ++e;
    if (e == edges_.size()) {
      if (weight < best_weight_) {
        best_weight_ = weight;
        best_ = chosen;
      }
      return;
    }
    if (weight + 2 >= best_weight_) return;
    Mask pair = bit(edges_[e].first) | bit(edges_[e].second);
    for (Mask c : cliques_) {
      if ((c & pair) != pair) continue;
      std::size_t w = weight + static_cast<std::size_t>(popcount(c));
      if (w >= best_weight_) continue;
      chosen.push_back(c);
      recurse(chosen, w);
      chosen.pop_back();
    }
  }

  std::vector<Vertex> ids_;
  DenseGraph dense_;
  std::vector<Mask> cliques_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<Mask> best_;
  std::size_t best_weight_ = 0;
};

}  // namespace

CliqueCover min_scc(const Graph& g, std::size_t cap) {
  if (g.vertex_count() > cap) throw CapExceeded("minimum sigma clique cover", g.vertex_count(), cap);
  return SccSearch(g).run();
}

std::size_t min_scc_weight(const Graph& g, std::size_t cap) { return scc_weight(min_scc(g, cap)); }

bool solve_ramsey_k3(const Graph& g, std::size_t k, const SmallFamily& family) {
  if (!family.has(SmallGraph::K3) || !family.has(SmallGraph::coK3))
    throw Error("solve_ramsey_k3 needs a family containing K3 and coK3");
  if (g.vertex_count() >= kRamsey3) return false;
  const ForbiddenFamily forbidden = family.forbidden();
  // Each split adds a vertex and free graphs have at most five vertices.
  const std::size_t depth = std::min(k, kRamsey3 - 1 - g.vertex_count());
  std::function<bool(const Graph&, std::size_t)> reach = [&](const Graph& h, std::size_t left) {
    if (is_free(h, forbidden)) return true;
    if (left == 0) return false;
    for (Vertex v : h.vertices())
      for (const SplitSpec& s : enumerate_splits(h, v, SplitPolicy::all))
        if (reach(apply_split(h, s), left - 1)) return true;
    return false;
  };
  return reach(g, depth);
}

ForbiddenFamily threshold_family() {
  return ForbiddenFamily::finite({path_graph(4), cycle_graph(4), cycle_graph(4).complement()});
}

ForbiddenFamily split_graph_family() {
  return ForbiddenFamily::finite({cycle_graph(4), cycle_graph(5), cycle_graph(4).complement()});
}

bool recognize_threshold(const Graph& g) { return is_free(g, threshold_family()); }
bool recognize_split(const Graph& g) { return is_free(g, split_graph_family()); }

// Destroying P4, C4 or C5 by a split always creates a coC4, which no split removes.
bool solve_threshold_vs(const Graph& g, std::size_t) { return recognize_threshold(g); }
bool solve_split_vs(const Graph& g, std::size_t) { return recognize_split(g); }

}  // namespace splitkit
