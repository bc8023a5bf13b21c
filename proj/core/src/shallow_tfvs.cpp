#include "splitkit/shallow_tfvs.hpp"

#include <algorithm>
#include <ostream>

#include "splitkit/error.hpp"

namespace splitkit {

VariableSet variables_of(const Graph& g) {
  VariableSet x;
  x.vertices = g.vertices();
  for (const Edge& e : g.edges()) {
    x.arcs.emplace_back(e.first, e.second);
    x.arcs.emplace_back(e.second, e.first);
  }
  return x;
}

Psi build_psi(const Graph& g) { return Psi{triangles(g)}; }

bool evaluate_phi(const Triangle& t, const Interpretation& i) {
  auto [a, b, c] = t;
  auto term = [&](Vertex x, Vertex y, Vertex z) { return i.holds(x) && (i.holds(Arc{y, x}) != i.holds(Arc{z, x})); };
  return term(a, b, c) || term(b, a, c) || term(c, a, b);
}

bool evaluate(const Psi& psi, const Interpretation& i) {
  return std::all_of(psi.triangles.begin(), psi.triangles.end(), [&](const Triangle& t) { return evaluate_phi(t, i); });
}

namespace {

std::map<Vertex, std::pair<Vertex, Vertex>> child_ids(const Graph& g, const Interpretation& i) {
  std::map<Vertex, std::pair<Vertex, Vertex>> out;
  Vertex next = g.next_free_id();
  for (Vertex v : i.vertices) {
    if (!g.has_vertex(v)) continue;
    out[v] = {next, next + 1};
    next += 2;
  }
  return out;
}

}  // namespace

Graph interpretation_to_graph(const Graph& g, const Interpretation& i) {
  auto children = child_ids(g, i);
  auto image = [&](Vertex u, Vertex other) {
    auto it = children.find(u);
    if (it == children.end()) return u;
    return i.holds(Arc{other, u}) ? it->second.second : it->second.first;
  };
  Graph out;
  for (Vertex v : g.vertices()) {
    auto it = children.find(v);
    if (it == children.end()) {
      out.add_vertex(v);
    } else {
      out.add_vertex(it->second.first);
      out.add_vertex(it->second.second);
    }
  }
  for (const Edge& e : g.edges()) out.add_edge(image(e.first, e.second), image(e.second, e.first));
  return out;
}

SplittingSequence interpretation_to_sequence(const Graph& g, const Interpretation& i) {
  SplittingSequence seq(g);
  for (Vertex v : i.vertices) {
    if (!g.has_vertex(v)) continue;
    const Graph& cur = seq.current();
    SplitSpec s;
    s.target = v;
    for (Vertex w : cur.neighbors(v)) {
      Vertex u = seq.ancestor(w);
      (i.holds(Arc{u, v}) ? s.part2 : s.part1).insert(w);
    }
    s.child1 = cur.next_free_id();
    s.child2 = s.child1 + 1;
    seq.push(s);
  }
  return seq;
}

void for_each_hitting_set(const std::vector<Triangle>& tris, std::size_t k,
                          const std::function<bool(const VertexSet&)>& visit) {
  VertexSet universe;
  for (const Triangle& t : tris) universe.insert(t.begin(), t.end());
  const std::vector<Vertex> cand(universe.begin(), universe.end());
  auto hits_all = [&](const VertexSet& s) {
    return std::all_of(tris.begin(), tris.end(), [&](const Triangle& t) {
      return s.count(t[0]) || s.count(t[1]) || s.count(t[2]);
    });
  };
  VertexSet current;
  // depth-first in lexicographic order; returns false once the visitor stops
  std::function<bool(std::size_t)> walk = [&](std::size_t from) {
    if (hits_all(current) && !visit(current)) return false;
    if (current.size() == k) return true;
    for (std::size_t i = from; i < cand.size(); ++i) {
      current.insert(cand[i]);
      bool go_on = walk(i + 1);
      current.erase(cand[i]);
      if (!go_on) return false;
    }
    return true;
  };
  walk(0);
}

std::vector<VertexSet> enumerate_hitting_sets(const std::vector<Triangle>& tris, std::size_t k) {
  std::vector<VertexSet> out;
  for_each_hitting_set(tris, k, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<Arc> guessed_arcs(const Graph& g, const VertexSet& s) {
  std::vector<Arc> out;
  for (const Edge& e : g.edges()) {
    if (s.count(e.first) && s.count(e.second)) {
      out.emplace_back(e.first, e.second);
      out.emplace_back(e.second, e.first);
    }
  }
  return out;
}

TwoSatInstance reduce_to_2sat(const Graph& g, const Psi& psi, const VertexSet& s, const std::map<Arc, bool>& guess) {
  auto expected = guessed_arcs(g, s);
  if (guess.size() != expected.size() ||
      !std::all_of(expected.begin(), expected.end(), [&](const Arc& a) { return guess.count(a) != 0; }))
    throw Error("guess must assign exactly the arc variables inside G[S]");
  auto fixed = [&](Vertex tail, Vertex head) { return guess.at(Arc{tail, head}); };

  TwoSatInstance out;
  for (const Triangle& t : psi.triangles) {
    std::vector<Vertex> in, out_of;
    for (Vertex v : t) (s.count(v) ? in : out_of).push_back(v);
    switch (in.size()) {
      case 0:
        throw Error("S does not hit every triangle");
      case 1: {
        // x ∧ (yx ⊕ zx) with x true
        Vertex x = in[0], y = out_of[0], z = out_of[1];
        out.clauses.push_back({ArcLit{{y, x}, true}, ArcLit{{z, x}, true}});
        out.clauses.push_back({ArcLit{{y, x}, false}, ArcLit{{z, x}, false}});
        break;
      }
      case 2: {
        // (yx ⊕ zx) ∨ (xy ⊕ zy) with yx, xy fixed: zx must differ from yx or zy from xy
        Vertex x = in[0], y = in[1], z = out_of[0];
        out.clauses.push_back({ArcLit{{z, x}, !fixed(y, x)}, ArcLit{{z, y}, !fixed(x, y)}});
        break;
      }
      default: {
        Interpretation i;
        i.vertices = {t[0], t[1], t[2]};
        for (const auto& [arc, value] : guess)
          if (value) i.arcs.insert(arc);
        if (!evaluate_phi(t, i)) out.contradiction = true;
        break;
      }
    }
  }
  return out;
}

std::optional<std::map<Arc, bool>> two_sat_solve(const TwoSatInstance& inst) {
  if (inst.contradiction) return std::nullopt;
  std::map<Arc, std::size_t> index;
  std::vector<Arc> arcs;
  auto var = [&](const Arc& a) {
    auto [it, inserted] = index.emplace(a, arcs.size());
    if (inserted) arcs.push_back(a);
    return it->second;
  };
  TwoSat sat;
  for (const auto& clause : inst.clauses) {
    if (clause.empty()) return std::nullopt;
    Lit a{var(clause[0].arc), !clause[0].positive};
    if (clause.size() == 1) {
      sat.add_unit(a);
      continue;
    }
    Lit b{var(clause[1].arc), !clause[1].positive};
    sat.add_clause(a, b);
  }
  auto values = sat.solve();
  if (!values) return std::nullopt;
  std::map<Arc, bool> out;
  for (std::size_t v = 0; v < arcs.size(); ++v) out[arcs[v]] = (*values)[v];
  return out;
}

std::optional<ShallowResult> solve_shallow_tfvs(const Graph& g, std::size_t k, ShallowStats* stats) {
  const Psi psi = build_psi(g);
  std::optional<ShallowResult> result;
  for_each_hitting_set(psi.triangles, k, [&](const VertexSet& s) {
    if (stats) ++stats->hitting_sets;
    const auto arcs = guessed_arcs(g, s);
    if (arcs.size() >= 63) throw CapExceeded("guessed arc variables", arcs.size(), 62);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << arcs.size()); ++bits) {
      if (stats) ++stats->guesses;
      std::map<Arc, bool> guess;
      for (std::size_t j = 0; j < arcs.size(); ++j) guess[arcs[j]] = (bits >> j) & 1u;
      TwoSatInstance inst = reduce_to_2sat(g, psi, s, guess);
      if (inst.contradiction) continue;
      if (stats) ++stats->two_sat_calls;
      auto solved = two_sat_solve(inst);
      if (!solved) continue;
      Interpretation m;
      m.vertices = s;
      for (const auto& [arc, value] : guess)
        if (value) m.arcs.insert(arc);
      for (const auto& [arc, value] : *solved)
        if (value) m.arcs.insert(arc);
      SplittingSequence seq = interpretation_to_sequence(g, m);
      if (!triangles(seq.current()).empty())
        throw Error("internal: 2-SAT model does not yield a triangle-free graph");
      result = ShallowResult{std::move(m), std::move(seq)};
      return false;
    }
    return true;
  });
  return result;
}

void write_model(std::ostream& out, const Interpretation& i) {
  for (Vertex v : i.vertices) out << "v " << v << '\n';
  for (const auto& [tail, head] : i.arcs)
    out << "e " << std::min(tail, head) << ' ' << std::max(tail, head) << " -> " << head << '\n';
}

}  // namespace splitkit
