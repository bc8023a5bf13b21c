#include "splitkit/reductions.hpp"

#include <algorithm>

#include "splitkit/error.hpp"
#include "splitkit/properties.hpp"

namespace splitkit {

namespace {

bool meets(const VertexSet& a, const VertexSet& b) {
  return std::any_of(a.begin(), a.end(), [&](Vertex v) { return b.count(v) != 0; });
}

VertexSet unite(VertexSet a, const VertexSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace

void SplittingConfiguration::validate() const {
  if (a == b) throw Error("configuration ends must be distinct");
  if (!h.has_vertex(a) || !h.has_vertex(b)) throw Error("configuration end is not a vertex of h");
  auto check_end = [&](Vertex x, const VertexSet& p1, const VertexSet& p2, const char* name) {
    if (p1.empty() || p2.empty()) throw Error(std::string("empty neighbour set at end ") + name);
    if (unite(p1, p2) != h.neighbors(x))
      throw Error(std::string("neighbour sets at end ") + name + " do not cover N(" + std::to_string(x) + ")");
  };
  check_end(a, a1set, a2set, "a");
  check_end(b, b1set, b2set, "b");
}

bool SplittingConfiguration::disjoint() const { return !meets(a1set, a2set) && !meets(b1set, b2set); }

SplittingConfiguration neighbour_configuration(const Graph& h, Vertex a, Vertex b) {
  SplittingConfiguration c{h, a, {}, {}, b, {}, {}};
  auto fill = [&](Vertex x, VertexSet& p1, VertexSet& p2) {
    if (!h.has_vertex(x) || h.degree(x) < 2) throw Error("configuration end needs degree at least two");
    const VertexSet& n = h.neighbors(x);
    p1 = {*n.begin()};
    p2 = VertexSet(std::next(n.begin()), n.end());
  };
  fill(a, c.a1set, c.a2set);
  fill(b, c.b1set, c.b2set);
  c.validate();
  return c;
}

std::optional<std::size_t> width(const SplittingConfiguration& c) {
  c.validate();
  auto end_distance = [&](Vertex x, const VertexSet& p1, const VertexSet& p2) {
    const Vertex c1 = c.h.next_free_id(), c2 = c1 + 1;
    return distance(apply_split(c.h, SplitSpec{x, p1, p2, c1, c2}), c1, c2);
  };
  auto da = end_distance(c.a, c.a1set, c.a2set);
  auto db = end_distance(c.b, c.b1set, c.b2set);
  if (!da) return db;
  if (!db) return da;
  return std::min(*da, *db);
}

namespace {

struct UnionFind {
  std::map<std::size_t, std::size_t> parent;

  std::size_t find(std::size_t x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent.emplace(x, x);
      return x;
    }
    if (it->second == x) return x;
    std::size_t root = find(it->second);
    parent[x] = root;
    return root;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    // smaller id stays representative
    if (x < y) parent[y] = x;
    else if (y < x) parent[x] = y;
  }
};

// The gadget of one arc with local ids: 0..n-1 for h, n, n+1 for a1, a2 and
// n+2, n+3 for b1, b2.
Graph gadget(const SplittingConfiguration& c, const std::map<Vertex, Vertex>& local, bool split_a, bool split_b) {
  const Vertex n = static_cast<Vertex>(local.size());
  const Vertex la = local.at(c.a), lb = local.at(c.b);
  auto to_local = [&](const VertexSet& s) {
    VertexSet out;
    for (Vertex v : s) out.insert(local.at(v));
    return out;
  };
  Graph g;
  for (const auto& [v, l] : local) g.add_vertex(l);
  for (const Edge& e : c.h.edges()) g.add_edge(local.at(e.first), local.at(e.second));

  if (split_a) split_in_place(g, SplitSpec{la, to_local(c.a1set), to_local(c.a2set), n, n + 1});
  if (split_b) {
    VertexSet b1 = to_local(c.b1set), b2 = to_local(c.b2set);
    if (split_a && c.h.adjacent(c.a, c.b)) {
      if (!c.disjoint()) throw Error("both ends of an arc split with adjacent ends needs a disjoint configuration");
      // a was replaced by whichever descendant kept b
      const Vertex a_child = c.a1set.count(c.b) ? n : n + 1;
      for (VertexSet* part : {&b1, &b2})
        if (part->erase(la)) part->insert(a_child);
    }
    split_in_place(g, SplitSpec{lb, b1, b2, n + 2, n + 3});
  }
  return g;
}

}  // namespace

ConstrResult constr(const DiGraph& skeleton, const SplittingConfiguration& c, const VertexSet& s) {
  c.validate();
  for (Vertex v : s)
    if (!skeleton.has_vertex(v)) throw Error("vertex " + std::to_string(v) + " of S is not in the skeleton");

  std::map<Vertex, Vertex> local;
  for (Vertex v : c.h.vertices()) local.emplace(v, static_cast<Vertex>(local.size()));
  const std::size_t n = local.size();
  const Vertex la = local.at(c.a), lb = local.at(c.b);

  ConstrResult out;
  out.stride = n + 4;
  const std::vector<SkeletonArc> arcs(skeleton.arcs().begin(), skeleton.arcs().end());

  UnionFind uf;
  std::vector<Graph> gadgets;
  for (std::size_t gi = 0; gi < arcs.size(); ++gi) {
    gadgets.push_back(gadget(c, local, s.count(arcs[gi].first) != 0, s.count(arcs[gi].second) != 0));
    for (Vertex l : gadgets.back().vertices()) uf.find(gi * out.stride + l);
  }

  // attachment point i (1 or 2) of the a- or b-end of gadget gi
  auto attachment = [&](std::size_t gi, int i, bool a_end) -> std::optional<std::size_t> {
    const Vertex v = a_end ? arcs[gi].first : arcs[gi].second;
    if (s.count(v)) return gi * out.stride + (a_end ? n : n + 2) + static_cast<std::size_t>(i - 1);
    if (i == 1) return gi * out.stride + (a_end ? la : lb);
    return std::nullopt;
  };
  std::map<Vertex, std::vector<std::size_t>> end_members;
  for (Vertex v : skeleton.vertex_set()) {
    for (int i : {1, 2}) {
      std::vector<std::size_t> cls;
      for (std::size_t gi = 0; gi < arcs.size(); ++gi) {
        std::optional<std::size_t> p;
        if (arcs[gi].second == v) p = attachment(gi, i, false);
        else if (arcs[gi].first == v) p = attachment(gi, i, true);
        if (p) cls.push_back(*p);
      }
      for (std::size_t x : cls) uf.unite(cls.front(), x);
      end_members[v].insert(end_members[v].end(), cls.begin(), cls.end());
    }
  }

  std::map<std::size_t, Vertex> rep_id;
  for (const auto& [x, p] : uf.parent) {
    std::size_t r = uf.find(x);
    if (!rep_id.count(r)) rep_id.emplace(r, 0);
  }
  Vertex next = 0;
  for (auto& [r, id] : rep_id) id = next++;
  for (const auto& [x, p] : uf.parent) out.glue[x] = rep_id.at(uf.find(x));

  for (Vertex v = 0; v < next; ++v) out.graph.add_vertex(v);
  for (std::size_t gi = 0; gi < arcs.size(); ++gi) {
    VertexSet& chi = out.chi_arc[arcs[gi]];
    for (Vertex l : gadgets[gi].vertices()) chi.insert(out.glue.at(gi * out.stride + l));
    for (const Edge& e : gadgets[gi].edges())
      out.graph.add_edge(out.glue.at(gi * out.stride + e.first), out.glue.at(gi * out.stride + e.second));
  }
  for (Vertex v : skeleton.vertex_set()) {
    VertexSet& chi = out.chi_vertex[v];
    for (std::size_t x : end_members[v]) chi.insert(out.glue.at(x));
  }
  return out;
}

SplittingSequence constr_sequence(const DiGraph& skeleton, const SplittingConfiguration& c,
                                  const std::vector<Vertex>& order) {
  VertexSet s;
  ConstrResult cur = constr(skeleton, c, s);
  SplittingSequence seq(cur.graph);
  std::map<Vertex, Vertex> to_constr;  // sequence vertex -> vertex of cur.graph
  for (Vertex v : cur.graph.vertices()) to_constr[v] = v;

  const std::size_t n = c.h.vertex_count();
  for (Vertex v : order) {
    if (s.count(v)) throw Error("vertex " + std::to_string(v) + " repeated in split order");
    const VertexSet& end = cur.chi_vertex.at(v);
    if (end.size() != 1) throw Error("skeleton vertex " + std::to_string(v) + " has no end to split");
    s.insert(v);
    ConstrResult next = constr(skeleton, c, s);

    std::map<Vertex, std::size_t> some_local;
    for (const auto& [x, id] : cur.glue) some_local.emplace(id, x);
    // the two descendants of v's end, read from any gadget incident to v
    std::size_t gi = 0;
    for (const auto& arc : skeleton.arcs()) {
      if (arc.first == v || arc.second == v) break;
      ++gi;
    }
    const bool a_end = std::next(skeleton.arcs().begin(), static_cast<std::ptrdiff_t>(gi))->first == v;
    const std::size_t base = gi * cur.stride + (a_end ? n : n + 2);
    const Vertex c1 = next.glue.at(base), c2 = next.glue.at(base + 1);

    std::map<Vertex, Vertex> from_constr;
    for (const auto& [sv, cv] : to_constr) from_constr[cv] = sv;
    SplitSpec spec;
    spec.target = from_constr.at(*end.begin());
    spec.child1 = seq.current().next_free_id();
    spec.child2 = spec.child1 + 1;
    std::map<Vertex, Vertex> moved;
    for (const auto& [sv, cv] : to_constr) {
      if (sv == spec.target) continue;
      moved[sv] = next.glue.at(some_local.at(cv));
    }
    for (Vertex w : seq.current().neighbors(spec.target)) {
      const Vertex w2 = moved.at(w);
      if (next.graph.adjacent(w2, c1)) spec.part1.insert(w);
      if (next.graph.adjacent(w2, c2)) spec.part2.insert(w);
    }
    seq.push(spec);
    moved[spec.child1] = c1;
    moved[spec.child2] = c2;
    to_constr = std::move(moved);
    cur = std::move(next);
  }

  const Graph& last = seq.current();
  bool same = last.vertex_count() == cur.graph.vertex_count() && last.edge_count() == cur.graph.edge_count();
  for (const Edge& e : last.edges())
    same = same && cur.graph.adjacent(to_constr.at(e.first), to_constr.at(e.second));
  if (!same) throw Error("internal: split sequence does not reach the construction");
  return seq;
}

VertexSet extract_vertex_cover(const SplittingSequence& seq, const ConstrResult& res, const DiGraph& skeleton) {
  if (!(seq.initial() == res.graph)) throw Error("sequence does not start at the construction");
  VertexSet ancestors;
  for (const SplitSpec& step : seq.steps()) ancestors.insert(seq.ancestor(step.target));
  VertexSet cover;
  for (Vertex a : ancestors) {
    auto at_end = std::find_if(res.chi_vertex.begin(), res.chi_vertex.end(),
                               [&](const auto& kv) { return kv.second.count(a) != 0; });
    if (at_end != res.chi_vertex.end()) {
      cover.insert(at_end->first);
      continue;
    }
    for (const SkeletonArc& arc : skeleton.arcs()) {
      if (res.chi_arc.at(arc).count(a)) {
        cover.insert(std::min(arc.first, arc.second));
        break;
      }
    }
  }
  return cover;
}

std::size_t subdivision_parameter(const ForbiddenFamily& family) {
  if (family.kind() != FamilyKind::finite || family.patterns().empty())
    throw Error("subdivision parameter needs a non-empty finite family");
  std::size_t best = 0;
  for (const Graph& f : family.patterns()) {
    auto d = diameter(f);
    if (!d) throw Error("family member of unbounded diameter (disconnected)");
    best = std::max(best, *d);
  }
  return 2 * best;
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  const auto edges = g.edges();
  return std::all_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return cover.count(e.first) || cover.count(e.second); });
}

VcInstance subdivided_vc_instance(const Graph& g, std::size_t ell, std::size_t k) {
  if (!is_regular(g, 3)) throw Error("subdivided vertex cover needs a cubic graph");
  return VcInstance{subdivide_with_paths(g, 2 * ell), k + ell * g.edge_count()};
}

VertexSet forward_vc_map(const Graph& g, const Subdivision& sub, const VertexSet& cover) {
  if (!is_vertex_cover(g, cover)) throw Error("not a vertex cover of the cubic graph");
  VertexSet out = cover;
  for (const auto& [e, path] : sub.paths) {
    // u = e.first covered: take every second path vertex starting with the second
    const std::size_t start = cover.count(e.first) ? 1 : 0;
    for (std::size_t i = start; i < path.size(); i += 2) out.insert(path[i]);
  }
  return out;
}

VertexSet backward_vc_map(const Graph& g, const Subdivision& sub, const VertexSet& cover) {
  if (!is_vertex_cover(sub.graph, cover)) throw Error("not a vertex cover of the subdivision");
  VertexSet c = cover;
  for (const auto& [e, path] : sub.paths) {
    std::vector<Vertex> walk{e.first};
    walk.insert(walk.end(), path.begin(), path.end());
    walk.push_back(e.second);
    while (walk.size() >= 4) {
      // contract p0 p1 p2 p3 to p0 p3
      c.erase(walk[1]);
      c.erase(walk[2]);
      if (!c.count(walk[0]) && !c.count(walk[3])) c.insert(walk[0]);
      walk.erase(walk.begin() + 1, walk.begin() + 3);
    }
  }
  VertexSet out;
  for (Vertex v : c)
    if (g.has_vertex(v)) out.insert(v);
  return out;
}

std::optional<std::size_t> cubic_subdivision_length(const Graph& g) {
  VertexSet branch;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) == 3) branch.insert(v);
    else if (g.degree(v) != 2) return std::nullopt;
  }
  if (branch.empty()) return std::nullopt;
  std::optional<std::size_t> length;
  std::set<Edge> base;
  VertexSet seen = branch;
  for (Vertex u : branch) {
    for (Vertex first : g.neighbors(u)) {
      Vertex prev = u, cur = first;
      std::size_t inner = 0;
      while (!branch.count(cur)) {
        seen.insert(cur);
        ++inner;
        const VertexSet& nb = g.neighbors(cur);
        Vertex nxt = *nb.begin() == prev ? *std::next(nb.begin()) : *nb.begin();
        prev = cur;
        cur = nxt;
      }
      if (cur == u) return std::nullopt;  // loop in the base graph
      if (length && *length != inner) return std::nullopt;
      length = inner;
      if (u < cur && !base.insert(Edge(u, cur)).second) return std::nullopt;  // parallel edges
    }
  }
  if (seen.size() != g.vertex_count()) return std::nullopt;  // a cycle of degree-2 vertices
  return length;
}

namespace {

std::vector<std::string> subdivided_cubic_warning(const Graph& g) {
  auto len = cubic_subdivision_length(g);
  if (len && *len == 2) return {};
  return {"input is not a 2-subdivided cubic graph; the equivalence is not guaranteed"};
}

}  // namespace

ReductionInstance bipartite_reduction(const Graph& g, std::size_t k) {
  ReductionInstance out{g, k, subdivided_cubic_warning(g), {}, {}};
  Vertex next = g.next_free_id();
  for (Vertex v : g.vertices()) out.chi_vertex[v] = {v};
  for (const Edge& e : g.edges()) {
    out.graph.add_edge(e.first, next);
    out.graph.add_edge(e.second, next);
    out.chi_arc[{e.first, e.second}] = {e.first, e.second, next};
    ++next;
  }
  return out;
}

ReductionInstance perfect_reduction(const Graph& g, std::size_t k) {
  ReductionInstance out{g, k, subdivided_cubic_warning(g), {}, {}};
  Vertex next = g.next_free_id();
  for (Vertex v : g.vertices()) out.chi_vertex[v] = {v};
  for (const Edge& e : g.edges()) {
    out.chi_arc[{e.first, e.second}] = {e.first, e.second, next, next + 1, next + 2};
    out.graph.add_edge(e.first, next);
    out.graph.add_edge(next, next + 1);
    out.graph.add_edge(next + 1, next + 2);
    out.graph.add_edge(next + 2, e.second);
    next += 3;
  }
  return out;
}

ParaNpInstance paranp_reduction(const Graph& g, std::size_t k) {
  if (k < 2) throw Error("para-NP reduction needs k >= 2");
  if (auto t = triangles(g); !t.empty())
    throw Error("input has the triangle {" + std::to_string(t[0][0]) + "," + std::to_string(t[0][1]) + "," +
                std::to_string(t[0][2]) + "}");
  ParaNpInstance out;
  out.base = g;
  out.k = k;
  const auto vertices = g.vertices();
  const Vertex n = static_cast<Vertex>(vertices.size());
  out.apex = 3 * n;
  out.graph.add_vertex(out.apex);
  for (Vertex j = 0; j < 3; ++j) {
    for (Vertex i = 0; i < n; ++i) {
      out.copies[j][vertices[i]] = j * n + i;
      out.graph.add_edge(j * n + i, out.apex);
    }
    for (const Edge& e : g.edges()) out.graph.add_edge(out.copies[j].at(e.first), out.copies[j].at(e.second));
  }
  Vertex next = out.apex + 1;
  for (std::size_t t = 0; t + 2 < k; ++t, next += 3) {
    out.triangles.push_back({next, next + 1, next + 2});
    out.graph.add_edge(next, next + 1);
    out.graph.add_edge(next + 1, next + 2);
    out.graph.add_edge(next, next + 2);
  }
  return out;
}

bool is_proper_coloring(const Graph& g, const Coloring& c, int colours) {
  for (Vertex v : g.vertices()) {
    auto it = c.find(v);
    if (it == c.end() || it->second < 1 || it->second > colours) return false;
  }
  const auto edges = g.edges();
  return std::none_of(edges.begin(), edges.end(), [&](const Edge& e) { return c.at(e.first) == c.at(e.second); });
}

SplittingSequence coloring_to_sequence(const ParaNpInstance& inst, const Coloring& coloring) {
  if (!is_proper_coloring(inst.base, coloring)) throw Error("not a proper 3-colouring of the base graph");
  auto colour_of = [&](Vertex w) {
    for (const auto& copy : inst.copies)
      for (const auto& [v, x] : copy)
        if (x == w) return coloring.at(v);
    throw Error("internal: apex neighbour outside the copies");
  };
  SplittingSequence seq(inst.graph);

  SplitSpec first{inst.apex, {}, {}, seq.current().next_free_id(), seq.current().next_free_id() + 1};
  for (Vertex w : inst.graph.neighbors(inst.apex)) (colour_of(w) == 1 ? first.part1 : first.part2).insert(w);
  seq.push(first);

  SplitSpec second{first.child2, {}, {}, seq.current().next_free_id(), seq.current().next_free_id() + 1};
  for (Vertex w : seq.current().neighbors(first.child2)) (colour_of(w) == 2 ? second.part1 : second.part2).insert(w);
  seq.push(second);

  for (const auto& t : inst.triangles) {
    const Vertex c1 = seq.current().next_free_id();
    seq.push(SplitSpec{t[0], {t[1]}, {t[2]}, c1, c1 + 1});
  }
  return seq;
}

std::optional<Coloring> sequence_to_coloring(const SplittingSequence& seq, const ParaNpInstance& inst) {
  if (!(seq.initial() == inst.graph)) throw Error("sequence does not start at the para-NP instance");
  if (!triangles(seq.current()).empty()) return std::nullopt;

  VertexSet split_ancestors;
  for (const SplitSpec& step : seq.steps()) split_ancestors.insert(seq.ancestor(step.target));
  auto untouched = std::find_if(inst.copies.begin(), inst.copies.end(), [&](const auto& copy) {
    return std::none_of(copy.begin(), copy.end(), [&](const auto& kv) { return split_ancestors.count(kv.second) != 0; });
  });
  if (untouched == inst.copies.end()) throw Error("every copy of the base graph had a vertex split");

  const VertexSet apex_children = seq.current_descendants(inst.apex);
  std::map<Vertex, int> rank;
  std::map<Vertex, Vertex> chosen;
  for (const auto& [v, x] : *untouched) {
    const VertexSet& nb = seq.current().neighbors(x);
    auto it = std::find_if(nb.begin(), nb.end(), [&](Vertex w) { return apex_children.count(w) != 0; });
    if (it == nb.end()) throw Error("internal: copy vertex lost its apex edge");
    chosen[v] = *it;
    rank.emplace(*it, 0);
  }
  if (rank.size() > 3) throw Error("apex descendants give more than three colour classes");
  int next = 1;
  for (auto& [w, r] : rank) r = next++;
  Coloring out;
  for (const auto& [v, w] : chosen) out[v] = rank.at(w);
  return out;
}

}  // namespace splitkit
