// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "splitkit/catalog.hpp"
#include "splitkit/exact_solver.hpp"
#include "splitkit/properties.hpp"
#include "splitkit/reductions.hpp"
#include "splitkit/shallow_tfvs.hpp"
#include "splitkit/small_families.hpp"
#include "splitkit/two_sat.hpp"

using namespace splitkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Tolerances. Agreement criteria are exact; only the timing criteria have slack.
constexpr double kTwoSatChainLimit = 1.0;      // seconds for 1e5 clauses
constexpr double kTwoSatGrowthLimit = 3.0;     // per-clause time ratio, 1e5 vs 1e4 clauses
constexpr double kShallowScaleLimit = 10.0;    // seconds, 20 vertices, k = 3
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

std::string graph_text(const Graph& g) {
  std::string s = std::to_string(g.vertex_count()) + "v";
  for (const Edge& e : g.edges()) s += " " + std::to_string(e.first) + "-" + std::to_string(e.second);
  return s;
}

ForbiddenFamily induced(std::vector<Graph> g) { return ForbiddenFamily::finite(std::move(g)); }

// 1. Dispatch against the exact solver.
Outcome dichotomy_agreement() {
  Outcome o;
  using SG = SmallGraph;
  std::vector<SmallFamily> table;
  for (unsigned m = 0; m < 16; ++m) {
    SmallFamily f;
    if (m & 1u) f.insert(SG::K3);
    if (m & 2u) f.insert(SG::coK3);
    if (m & 4u) f.insert(SG::P3);
    if (m & 8u) f.insert(SG::coP3);
    table.push_back(f);
  }
  std::vector<SmallFamily> tiny;
  for (unsigned bits = 0; bits < 256; ++bits) {
    const SmallFamily f = SmallFamily::from_bits(static_cast<std::uint8_t>(bits));
    if (f.has_tiny_member()) tiny.push_back(f);
  }
  std::mt19937_64 rng(kSeed);
  std::shuffle(tiny.begin(), tiny.end(), rng);
  tiny.resize(30);

  const auto graphs = oracle::graphs_up_to(5);
  std::size_t compared = 0, hard = 0;
  auto sweep = [&](const SmallFamily& f) {
    const bool np_case = f == SmallFamily{SG::P3} || f == SmallFamily{SG::K3};
    for (const Graph& g : graphs)
      for (std::size_t k = 0; k <= 2; ++k) {
        const DispatchResult d = dispatch(f, g, k);
        if (np_case) {
          ++hard;
          if (d.decision != Decision::np_hard) o.fail(f.to_string() + " should be the np-hard case");
          continue;
        }
        if (d.decision == Decision::np_hard) {
          o.fail(f.to_string() + " wrongly reported np-hard");
          continue;
        }
        ++compared;
        const bool truth = solve(g, f.forbidden(), k).has_value();
        if (truth != (d.decision == Decision::yes))
          o.fail(f.to_string() + " on " + graph_text(g) + " k=" + std::to_string(k) + ": dispatch " +
                 to_string(d.decision) + ", oracle " + (truth ? "yes" : "no"));
      }
  };
  for (const SmallFamily& f : table) sweep(f);
  for (const SmallFamily& f : tiny) sweep(f);
  o.detail = "16 table cases + 30 sampled tiny-member families, " + std::to_string(graphs.size()) +
             " graphs, k<=2: " + std::to_string(compared) + " decisions compared, " + std::to_string(hard) +
             " np-hard sentinels";
  return o;
}

// 2. Edge-count formula against the oracle minimum.
Outcome p3_k3_minimality() {
  Outcome o;
  const ForbiddenFamily f = induced({pattern_graph("P3"), pattern_graph("K3")});
  std::size_t checked = 0, beyond = 0;
  for (const Graph& g : oracle::graphs_up_to(5)) {
    const std::size_t formula = p3_k3_threshold(g);
    // Disjoint search is exact here. Deleting edges before a split sequence only
    // deletes edges from its result, and a graph of maximum degree 1 stays so;
    // hence each non-disjoint split can drop its duplicated neighbours.
    const SolverOptions opts{SolveMode::disjoint, g.vertex_count() + 6};
    const auto min = min_splits(g, f, 6, opts);
    if (formula <= 6) {
      ++checked;
      if (min != formula)
        o.fail(graph_text(g) + ": formula " + std::to_string(formula) + ", oracle " +
               (min ? std::to_string(*min) : std::string("> 6")));
    } else {
      ++beyond;
      if (min) o.fail(graph_text(g) + ": formula " + std::to_string(formula) + " but oracle found " + std::to_string(*min));
    }
  }
  // non-disjoint moves as well, where the search stays small
  std::size_t general = 0;
  for (const Graph& g : oracle::graphs_up_to(5)) {
    const std::size_t formula = p3_k3_threshold(g);
    if (formula > 5) continue;
    ++general;
    if (min_splits(g, f, formula, {SolveMode::general, g.vertex_count() + formula}) != formula)
      o.fail(graph_text(g) + ": minimum over non-disjoint splits differs from formula");
  }
  o.detail = std::to_string(checked) + " graphs with formula <= 6 matched, " + std::to_string(beyond) +
             " with formula > 6 have no certificate of length <= 6, " +
             std::to_string(general) + " with formula <= 5 re-checked allowing non-disjoint splits";
  return o;
}

// 3. Fixed values.
Outcome fixed_values() {
  Outcome o;
  using SG = SmallGraph;
  const ForbiddenFamily p3k3 = induced({pattern_graph("P3"), pattern_graph("K3")});
  const Graph k3k1 = disjoint_union(complete_graph(3), complete_graph(1));
  const auto min = min_splits(k3k1, p3k3, 5);
  if (min != 3u) o.fail("K3+K1 oracle minimum is not 3");
  if (p3_k3_threshold(k3k1) != 3) o.fail("K3+K1 formula is not 3");
  if (dispatch({SG::P3, SG::K3}, k3k1, 3).decision != Decision::yes ||
      dispatch({SG::P3, SG::K3}, k3k1, 2).decision != Decision::no)
    o.fail("K3+K1 dispatch");

  const Graph duo = overlapping_cliques(5, 2);
  const SmallFamily pc{SG::P3, SG::coK3};
  if (dispatch(pc, duo, 2).decision != Decision::yes) o.fail("two K5 sharing K2: not positive at k=2");
  if (dispatch(pc, duo, 1).decision != Decision::no) o.fail("two K5 sharing K2: not negative at k=1");
  if (min_scc_weight(duo) != 10) o.fail("two K5 sharing K2: cover weight is not 10");
  if (midpoints(duo).size() != 2) o.fail("two K5 sharing K2: |M| is not 2");
  if (solve(duo, pc.forbidden(), 1)) o.fail("oracle finds a 1-split certificate for two K5 sharing K2");
  // the shared edge forces non-disjoint splits: y must stay on both sides of x
  const auto two = solve(duo, pc.forbidden(), 2);
  if (!two || !verify_certificate(*two, pc.forbidden(), 2)) o.fail("oracle finds no 2-split certificate for two K5 sharing K2");

  const Graph p4 = path_graph(4);
  for (std::size_t k = 0; k <= 10; ++k)
    if (solve_threshold_vs(p4, k)) o.fail("P4 threshold positive at k=" + std::to_string(k));
  for (std::size_t k = 0; k <= 4; ++k)
    if (solve(p4, threshold_family(), k)) o.fail("oracle finds a threshold certificate for P4 at k=" + std::to_string(k));
  o.detail = "K3+K1 needs 3; two K5 sharing K2 yes@2 no@1 (weight 10, |M|=2); P4 threshold no for k<=10 (oracle k<=4)";
  return o;
}

Interpretation from_mask(const VariableSet& x, std::uint32_t mask) {
  Interpretation i;
  std::size_t bit = 0;
  for (Vertex v : x.vertices)
    if (mask >> bit++ & 1u) i.vertices.insert(v);
  for (const Arc& a : x.arcs)
    if (mask >> bit++ & 1u) i.arcs.insert(a);
  return i;
}

// 4. Shallow XP solver against the oracle in shallow mode.
Outcome shallow_xp() {
  Outcome o;
  const ForbiddenFamily k3 = induced({complete_graph(3)});
  std::size_t compared = 0, positive = 0;
  for (const Graph& g : oracle::graphs_up_to(6))
    for (std::size_t k = 0; k <= 3; ++k) {
      ++compared;
      const auto xp = solve_shallow_tfvs(g, k);
      const bool truth = solve(g, k3, k, {SolveMode::shallow}).has_value();
      if (xp.has_value() != truth) {
        o.fail(graph_text(g) + " k=" + std::to_string(k) + ": xp " + (xp ? "yes" : "no") + ", oracle " +
               (truth ? "yes" : "no"));
        continue;
      }
      if (!xp) continue;
      ++positive;
      if (!verify_certificate(xp->sequence, k3, k, SolveMode::shallow)) o.fail(graph_text(g) + ": xp certificate rejected");
    }
  std::size_t interpretations = 0;
  for (const char* name : {"K3", "paw", "diamond", "K4"}) {
    const Graph g = pattern_graph(name);
    const Psi psi = build_psi(g);
    const VariableSet x = variables_of(g);
    for (std::uint32_t m = 0; m < (1u << x.size()); ++m, ++interpretations) {
      const Interpretation i = from_mask(x, m);
      if (evaluate(psi, i) != triangles(interpretation_to_graph(g, i)).empty())
        o.fail(std::string("psi characterization fails on ") + name);
    }
  }
  o.detail = std::to_string(compared) + " (graph, k) pairs agree (" + std::to_string(positive) +
             " positive, certificates verified); psi exact on " + std::to_string(interpretations) +
             " interpretations of K3, paw, diamond, K4";
  return o;
}

double chain_seconds(std::size_t clauses) {
  double best = 1e9;
  for (int rep = 0; rep < 3; ++rep) {
    TwoSat s(clauses + 1);
    for (std::size_t i = 0; i < clauses; ++i) s.add_clause(neg(i), pos(i + 1));
    s.add_unit(pos(0));
    const auto t = Clock::now();
    const auto m = s.solve();
    best = std::min(best, seconds_since(t));
    if (!m || !(*m)[clauses]) return -1;
  }
  return best;
}

// 5. 2-SAT.
Outcome two_sat() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::size_t sat = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t vars = 1 + rng() % 15;
    const std::size_t count = rng() % (3 * vars + 1);
    TwoSat s(vars);
    std::vector<oracle::TtClause> tt;
    for (std::size_t c = 0; c < count; ++c) {
      const Lit a{rng() % vars, static_cast<bool>(rng() & 1u)}, b{rng() % vars, static_cast<bool>(rng() & 1u)};
      s.add_clause(a, b);
      tt.push_back({{a.var, a.negated}, {b.var, b.negated}});
    }
    const auto model = s.solve();
    const bool truth = oracle::truth_table_2sat(vars, tt);
    if (model.has_value() != truth) o.fail("instance " + std::to_string(trial) + " disagrees with the truth table");
    if (model) {
      ++sat;
      for (const auto& [a, b] : tt)
        if ((*model)[a.first] == a.second && (*model)[b.first] == b.second)
          o.fail("instance " + std::to_string(trial) + ": returned assignment violates a clause");
    }
  }
  const double t4 = chain_seconds(10000), t5 = chain_seconds(100000);
  if (t4 < 0 || t5 < 0) o.fail("implication chain solved incorrectly");
  if (t5 >= kTwoSatChainLimit) o.fail("1e5-clause chain took " + std::to_string(t5) + " s");
  const double growth = (t5 / 1e5) / std::max(t4 / 1e4, 1e-12);
  if (growth > kTwoSatGrowthLimit) o.fail("per-clause time grew by " + std::to_string(growth));
  std::ostringstream d;
  d << "1000 random instances match truth tables (" << sat << " sat); chain 1e4: " << t4 * 1e3 << " ms, 1e5: "
    << t5 * 1e3 << " ms (< " << kTwoSatChainLimit << " s), per-clause growth " << growth << " (<= "
    << kTwoSatGrowthLimit << ")";
  o.detail = d.str();
  return o;
}

// 6. Splitting lemmas.
Outcome splitting_lemmas() {
  Outcome o;
  std::size_t graphs = 0, violations = 0;
  for (const Graph& g : oracle::graphs_up_to(5)) {
    ++graphs;
    const auto bad = oracle::split_lemma_violations(g);
    violations += bad.size();
    if (!bad.empty()) o.fail(graph_text(g) + ": " + bad.front());
  }
  o.detail = std::to_string(graphs) + " graphs, every split of every vertex: " + std::to_string(violations) +
             " counterexamples";
  return o;
}

// 7. Reduction round trips.
Outcome reduction_round_trips() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::size_t covers_checked = 0;
  for (const char* name : {"K4", "K33", "prism"}) {
    const Graph g = cubic_graph(name);
    const std::size_t tau = oracle::min_vertex_cover(g);
    for (std::size_t ell = 0; ell <= 2; ++ell) {
      const VcInstance inst = subdivided_vc_instance(g, ell, tau);
      const std::size_t shift = ell * g.edge_count();
      const std::string where = std::string(name) + " ell=" + std::to_string(ell);
      if (inst.k != tau + shift) o.fail(where + ": threshold is not k + ell|E|");
      if (oracle::min_vertex_cover(inst.sub.graph) != tau + shift) o.fail(where + ": VC(G*) != VC(G) + ell|E|");
      // forward on every minimum cover of g, and backward on the image and on random covers of G*
      for (const VertexSet& c : oracle::all_vertex_covers(g)) {
        if (c.size() != tau) continue;
        const VertexSet f = forward_vc_map(g, inst.sub, c);
        ++covers_checked;
        if (!oracle::covers(inst.sub.graph, f) || f.size() != tau + shift) o.fail(where + ": forward map");
        const VertexSet b = backward_vc_map(g, inst.sub, f);
        if (!oracle::covers(g, b) || b.size() > tau) o.fail(where + ": backward of forward");
      }
      const VertexSet opt = oracle::min_vertex_cover_set(inst.sub.graph);
      const VertexSet back = backward_vc_map(g, inst.sub, opt);
      if (!oracle::covers(g, back) || back.size() != tau) o.fail(where + ": backward of an optimal cover");
      for (int trial = 0; trial < 200; ++trial) {
        auto vs = inst.sub.graph.vertices();
        std::shuffle(vs.begin(), vs.end(), rng);
        VertexSet c(vs.begin(), vs.end());
        for (Vertex v : vs) {
          c.erase(v);
          if (!oracle::covers(inst.sub.graph, c) || rng() % 4 == 0) c.insert(v);
        }
        const VertexSet b = backward_vc_map(g, inst.sub, c);
        ++covers_checked;
        if (!oracle::covers(g, b) || b.size() + shift > c.size()) o.fail(where + ": backward map on a random cover");
      }
    }
  }

  std::size_t certificates = 0;
  const std::vector<std::pair<std::string, SplittingConfiguration>> configs = {
      {"K3", neighbour_configuration(complete_graph(3), 0, 1)}, {"C4", neighbour_configuration(cycle_graph(4), 0, 2)}};
  for (const auto& [sk_name, sk] : std::vector<std::pair<std::string, Graph>>{
           {"K2", complete_graph(2)}, {"P3", path_graph(3)}, {"K3", complete_graph(3)}, {"C4", cycle_graph(4)}}) {
    const DiGraph d = DiGraph::ascending_orientation(sk);
    for (const auto& [c_name, c] : configs) {
      const ConstrResult res = constr(d, c, {});
      const ForbiddenFamily fam = induced({c.h});
      const std::string where = "skeleton " + sk_name + ", config " + c_name;
      for (std::size_t k = 0; k <= 3; ++k) {
        const auto cert = solve(res.graph, fam, k, {SolveMode::general, res.graph.vertex_count() + k});
        if (!cert) continue;
        ++certificates;
        const VertexSet cover = extract_vertex_cover(*cert, res, d);
        if (!oracle::covers(sk, cover) || cover.size() > cert->size())
          o.fail(where + " k=" + std::to_string(k) + ": extracted set is not a cover within budget");
      }
      // every certificate of minimum length, not only the one the solver returns
      const std::size_t tau = oracle::min_vertex_cover(sk);
      std::function<void(SplittingSequence&, std::size_t)> all = [&](SplittingSequence& seq, std::size_t left) {
        if (is_free(seq.current(), fam)) {
          ++certificates;
          const VertexSet cover = extract_vertex_cover(seq, res, d);
          if (!oracle::covers(sk, cover) || cover.size() > seq.size()) o.fail(where + ": exhaustive certificate");
          return;
        }
        if (left == 0) return;
        for (Vertex v : seq.current().vertices())
          for (const SplitSpec& s : enumerate_splits(seq.current(), v, SplitPolicy::nontrivial)) {
            SplittingSequence next = seq;
            next.push(s);
            all(next, left - 1);
          }
      };
      SplittingSequence start(res.graph);
      all(start, tau);
    }
  }
  o.detail = "subdivided VC on K4, K3,3, prism (ell 0..2): VC(G*) = VC(G) + ell|E|, " + std::to_string(covers_checked) +
             " cover translations; " + std::to_string(certificates) +
             " Constr certificates (skeletons K2, P3, K3, C4; K3/C4 configs) give covers";
  return o;
}

// 8. para-NP reduction.
Outcome paranp() {
  Outcome o;
  const ForbiddenFamily k3 = induced({complete_graph(3)});
  for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{{"K2", complete_graph(2)}, {"P3", path_graph(3)}}) {
    const ParaNpInstance inst = paranp_reduction(g, 2);
    const auto col = oracle::three_coloring(g);
    if (!col) {
      o.fail(name + ": no 3-colouring");
      continue;
    }
    const SplittingSequence seq = coloring_to_sequence(inst, *col);
    if (!verify_certificate(seq, k3, 2)) o.fail(name + ": forward certificate rejected");
    const auto back = sequence_to_coloring(seq, inst);
    if (!back || !is_proper_coloring(g, *back)) o.fail(name + ": backward colouring of the forward certificate");
    const auto cert = solve(inst.graph, k3, 2);
    if (!cert) o.fail(name + ": oracle says negative");
    else if (const auto c = sequence_to_coloring(*cert, inst); !c || !is_proper_coloring(g, *c))
      o.fail(name + ": backward colouring of the oracle certificate");
  }
  const Graph c5 = cycle_graph(5);
  const ParaNpInstance inst = paranp_reduction(c5, 2);
  const auto col = oracle::three_coloring(c5);
  if (!col || !verify_certificate(coloring_to_sequence(inst, *col), k3, 2)) o.fail("C5: forward certificate rejected");
  o.detail = "K2, P3 (k=2): forward certificates verify, backward colourings proper, oracle positive; C5 (k=2, " +
             std::to_string(inst.graph.vertex_count()) + " vertices): forward certificate verifies";
  return o;
}

// 9. Shallow solver at scale. Ten seeds, so that some instances reach the 2-SAT stage.
Outcome shallow_scale() {
  Outcome o;
  const ForbiddenFamily k3 = induced({complete_graph(3)});
  double worst = 0;
  std::size_t yes = 0, hitting = 0, calls = 0;
  for (std::uint64_t seed = kSeed; seed < kSeed + 10; ++seed) {
    const Graph g = random_graph_m(20, 40, seed);
    ShallowStats stats;
    const auto t = Clock::now();
    const auto r = solve_shallow_tfvs(g, 3, &stats);
    const double s = seconds_since(t);
    worst = std::max(worst, s);
    hitting += stats.hitting_sets;
    calls += stats.two_sat_calls;
    if (s >= kShallowScaleLimit) o.fail("seed " + std::to_string(seed) + " took " + std::to_string(s) + " s");
    if (r) {
      ++yes;
      if (!verify_certificate(r->sequence, k3, 3, SolveMode::shallow))
        o.fail("seed " + std::to_string(seed) + ": certificate rejected");
    }
  }
  std::ostringstream d;
  d << "G(20, 40 edges), k=3, 10 seeds: " << yes << " positive, slowest " << worst << " s (< " << kShallowScaleLimit
    << " s), " << hitting << " hitting sets, " << calls << " 2-SAT calls";
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dichotomy agreement", dichotomy_agreement},
      {"P3-K3 formula minimality", p3_k3_minimality},
      {"fixed values", fixed_values},
      {"shallow XP solver", shallow_xp},
      {"2-SAT", two_sat},
      {"splitting lemmas", splitting_lemmas},
      {"reduction round trips", reduction_round_trips},
      {"para-NP reduction", paranp},
      {"shallow solver scale", shallow_scale},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t);
    char head[96];
    std::snprintf(head, sizeof head, "[%s] %zu %s (%.1f s): ", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), s);
    std::cout << head << o.detail;
    if (!o.pass) std::cout << " | first failure: " << o.first_failure;
    std::cout << std::endl;
    failures += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures;
}
