#include <doctest.h>

#include <algorithm>
#include <functional>
#include <iterator>
#include <set>

#include "oracles.hpp"
#include "splitkit/catalog.hpp"
#include "splitkit/exact_solver.hpp"
#include "splitkit/properties.hpp"
#include "splitkit/small_families.hpp"

using namespace splitkit;
using SG = SmallGraph;

namespace {

bool oracle_says(const SmallFamily& f, const Graph& g, std::size_t k) { return solve(g, f.forbidden(), k).has_value(); }

// Minimum sigma clique cover weight: branch on the first uncovered edge over every clique containing it.
std::size_t brute_scc(const Graph& g) {
  std::vector<VertexSet> cliques;
  const auto vs = g.vertices();
  for (std::uint32_t m = 1; m < (1u << vs.size()); ++m) {
    VertexSet c;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (m >> i & 1u) c.insert(vs[i]);
    if (c.size() >= 2 && is_clique(g, c)) cliques.push_back(c);
  }
  const auto edges = g.edges();
  std::size_t best = ~std::size_t{0};
  std::vector<VertexSet> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t weight) {
    if (weight >= best) return;
    for (const Edge& e : edges) {
      bool covered = false;
      for (const auto& c : chosen) covered |= c.count(e.first) && c.count(e.second);
      if (covered) continue;
      for (const auto& c : cliques) {
        if (!c.count(e.first) || !c.count(e.second)) continue;
        chosen.push_back(c);
        rec(weight + c.size());
        chosen.pop_back();
      }
      return;
    }
    best = weight;
  };
  rec(0);
  return best;
}

}  // namespace

TEST_CASE("dispatch examples") {
  CHECK(dispatch({SG::coK2}, complete_graph(3), 5).decision == Decision::yes);
  CHECK(dispatch({SG::coK2}, path_graph(3), 5).decision == Decision::no);
  CHECK(dispatch({SG::P3}, complete_graph(3), 1).decision == Decision::np_hard);
  CHECK(dispatch({SG::K3}, complete_graph(3), 1).decision == Decision::np_hard);
  CHECK(dispatch({SG::K0}, Graph(), 3).decision == Decision::no);
  CHECK(dispatch({}, complete_graph(4), 0).decision == Decision::yes);
  for (std::size_t k = 0; k <= 4; ++k) {
    CHECK(dispatch({SG::coP3}, path_graph(3), k).decision == Decision::yes);
    CHECK(dispatch({SG::coP3}, pattern_graph("P4"), k).decision == Decision::no);
  }
}

TEST_CASE("dispatch covers every small family") {
  std::set<std::uint8_t> hard;
  const std::vector<Graph> hosts = {Graph(), complete_graph(1), path_graph(3), complete_graph(3), cycle_graph(5),
                                    pattern_graph("coP3")};
  for (unsigned bits = 0; bits < 256; ++bits) {
    const SmallFamily f = SmallFamily::from_bits(static_cast<std::uint8_t>(bits));
    for (const Graph& g : hosts)
      for (std::size_t k = 0; k <= 2; ++k)
        if (dispatch(f, g, k).decision == Decision::np_hard) hard.insert(f.bits());
  }
  CHECK(hard == std::set<std::uint8_t>{SmallFamily{SG::K3}.bits(), SmallFamily{SG::P3}.bits()});
  CHECK(SmallFamily{SG::P3, SG::coK3}.to_string() == "{coK3,P3}");
}

TEST_CASE("dispatch agrees with the oracle on every family, graphs up to four vertices") {
  for (unsigned bits = 0; bits < 256; ++bits) {
    const SmallFamily f = SmallFamily::from_bits(static_cast<std::uint8_t>(bits));
    for (const Graph& g : oracle::graphs_up_to(4))
      for (std::size_t k = 0; k <= 2; ++k) {
        const DispatchResult d = dispatch(f, g, k);
        if (d.decision == Decision::np_hard) continue;
        CAPTURE(f.to_string());
        CAPTURE(format_graph(g));
        CAPTURE(k);
        REQUIRE((d.decision == Decision::yes) == oracle_says(f, g, k));
      }
  }
}

TEST_CASE("P3-K3 threshold") {
  const Graph k3k1 = disjoint_union(complete_graph(3), complete_graph(1));
  CHECK(p3_k3_threshold(k3k1) == 3);
  CHECK(solve_p3_k3(k3k1, 3));
  CHECK_FALSE(solve_p3_k3(k3k1, 2));
  CHECK(solve_p3_k3(edgeless_graph(4), 0));
  const ForbiddenFamily f = SmallFamily{SG::P3, SG::K3}.forbidden();
  for (const Graph& g : oracle::graphs_up_to(6)) {
    const SplittingSequence seq = p3_k3_certificate(g);
    REQUIRE(seq.size() == p3_k3_threshold(g));
    REQUIRE(verify_certificate(seq, f, seq.size(), SolveMode::disjoint));
  }
}

TEST_CASE("2|E| = |V \\ I| characterizes {K3, P3}-freeness") {
  const std::vector<Graph> pats = {pattern_graph("K3"), pattern_graph("P3")};
  for (std::size_t n = 0; n <= 7; ++n)
    for (const Graph& g : oracle::graphs_on(n))
      REQUIRE(oracle::free_of(g, pats, true) ==
              (2 * g.edge_count() == g.vertex_count() - g.isolated_vertices().size()));
}

TEST_CASE("midpoints") {
  CHECK(midpoints(path_graph(3)) == VertexSet{1});
  CHECK(midpoints(complete_graph(4)).empty());
  const Graph duo = overlapping_cliques(5, 2);
  CHECK(duo.vertex_count() == 8);
  CHECK(midpoints(duo).size() == 2);
  for (Vertex m : midpoints(duo)) CHECK(duo.degree(m) == 7);
}

TEST_CASE("two overlapping five-cliques") {
  const Graph duo = overlapping_cliques(5, 2);
  CHECK(solve_p3_co_k3(duo, 2));
  CHECK_FALSE(solve_p3_co_k3(duo, 1));
  CHECK(min_scc_weight(duo) == 10);
  CHECK(verify_scc(duo, min_scc(duo)));
  CHECK_FALSE(solve_p3_co_k3(edgeless_graph(3), 5));
  CHECK(midpoint_rule_p3_co_k3(duo, 2));
}

TEST_CASE("midpoint rule alone accepts P4") {
  const Graph p4 = path_graph(4);
  CHECK(midpoint_rule_p3_co_k3(p4, 2));
  CHECK_FALSE(solve_p3_co_k3(p4, 2));
  CHECK_FALSE(solve(p4, SmallFamily{SG::P3, SG::coK3}.forbidden(), 3));
  for (const Graph& g : oracle::graphs_up_to(5))
    for (std::size_t k = 0; k <= 3; ++k) {
      const bool truth = solve(g, SmallFamily{SG::P3, SG::coK3}.forbidden(), k).has_value();
      REQUIRE(solve_p3_co_k3(g, k) == truth);
      if (midpoint_rule_p3_co_k3(g, k) != truth) REQUIRE(midpoint_rule_p3_co_k3(g, k));
    }
}

TEST_CASE("sigma clique covers") {
  const Graph cl = disjoint_union(complete_graph(2), complete_graph(3));
  CHECK(min_scc_weight(cl) == 5);
  CHECK(scc_weight({{0, 1}, {2, 3, 4}}) == 5);
  CHECK(verify_scc(cl, {{0, 1}, {2, 3, 4}}));
  CHECK_FALSE(verify_scc(cl, {{0, 1}}));
  CHECK_FALSE(verify_scc(cl, {{0, 1, 2}, {2, 3, 4}}));
  // covering by maximal cliques only would cost 9 here
  const Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {2, 4}});
  CHECK(min_scc_weight(g) == 8);
  CHECK(brute_scc(g) == 8);
  for (const Graph& h : oracle::graphs_up_to(6)) REQUIRE(min_scc_weight(h) == (h.edge_count() ? brute_scc(h) : 0));
}

TEST_CASE("two-clique covers meet in the midpoints") {
  for (std::size_t n = 2; n <= 7; ++n)
    for (const Graph& g : oracle::graphs_on(n)) {
      if (!g.isolated_vertices().empty()) continue;
      std::vector<VertexSet> cliques;
      for (std::uint32_t m = 1; m < (1u << n); ++m) {
        VertexSet c;
        for (std::size_t i = 0; i < n; ++i)
          if (m >> i & 1u) c.insert(static_cast<Vertex>(i));
        if (is_clique(g, c)) cliques.push_back(c);
      }
      for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = i + 1; j < cliques.size(); ++j) {
          const VertexSet &a = cliques[i], &b = cliques[j];
          if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
              std::includes(b.begin(), b.end(), a.begin(), a.end()))
            continue;
          if (!verify_scc(g, {a, b})) continue;
          VertexSet meet;
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(meet, meet.end()));
          REQUIRE(midpoints(g) == meet);
        }
    }
}

TEST_CASE("cluster splitting number equals scc weight minus non-isolated vertices") {
  const ForbiddenFamily cluster = SmallFamily{SG::P3}.forbidden();
  for (const Graph& g : oracle::graphs_up_to(5)) {
    const std::size_t expect = min_scc_weight(g) - g.vertex_count() + g.isolated_vertices().size();
    CAPTURE(format_graph(g));
    REQUIRE(min_splits(g, cluster, expect, {SolveMode::general, g.vertex_count() + expect}) == expect);
  }
}

TEST_CASE("K3 and coK3 together") {
  const SmallFamily f{SG::K3, SG::coK3};
  CHECK(solve_ramsey_k3(cycle_graph(5), 0, f));
  CHECK_FALSE(solve_ramsey_k3(complete_graph(6), 10, f));
  for (std::size_t k = 0; k <= 6; ++k)
    CHECK_FALSE(solve_ramsey_k3(disjoint_union(path_graph(3), complete_graph(1)), k, f));
  CHECK(solve_ramsey_k3(complete_graph(3), 1, f));
  CHECK_FALSE(solve_ramsey_k3(complete_graph(3), 0, f));
}

TEST_CASE("threshold and split graphs") {
  for (std::size_t k = 0; k <= 10; ++k) CHECK_FALSE(solve_threshold_vs(path_graph(4), k));
  CHECK(solve_split_vs(complete_graph(3), 0));
  CHECK(recognize_threshold(named_graph("claw", 4)));
  CHECK_FALSE(recognize_split(cycle_graph(5)));
  for (const Graph& g : oracle::graphs_up_to(5))
    for (std::size_t k = 0; k <= 2; ++k) {
      REQUIRE(solve_threshold_vs(g, k) == solve(g, threshold_family(), k).has_value());
      REQUIRE(solve_split_vs(g, k) == solve(g, split_graph_family(), k).has_value());
    }
  for (const Graph& g : oracle::graphs_up_to(6)) {
    REQUIRE(recognize_threshold(g) == is_free(g, threshold_family()));
    REQUIRE(recognize_split(g) == is_free(g, split_graph_family()));
  }
}
