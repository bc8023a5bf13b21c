#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "splitkit/canonical.hpp"
#include "splitkit/catalog.hpp"
#include "splitkit/error.hpp"
#include "splitkit/exact_solver.hpp"

using namespace splitkit;

namespace {

ForbiddenFamily induced(std::initializer_list<const char*> names) {
  std::vector<Graph> g;
  for (const char* n : names) g.push_back(pattern_graph(n));
  return ForbiddenFamily::finite(std::move(g));
}

Graph relabel(const Graph& g, const std::vector<Vertex>& to) {
  Graph out;
  for (Vertex v : g.vertices()) out.add_vertex(to[v]);
  for (const Edge& e : g.edges()) out.add_edge(to[e.first], to[e.second]);
  return out;
}

}  // namespace

TEST_CASE("canonical form") {
  const Graph p3 = path_graph(3);
  CHECK(canonical_form(p3) == canonical_form(relabel(p3, {5, 9, 7})));
  CHECK(canonical_form(complete_graph(3)) != canonical_form(p3));
  CHECK_THROWS_AS(canonical_form(edgeless_graph(13)), CapExceeded);

  std::set<CanonicalForm> forms;
  for (std::uint32_t m = 0; m < 64; ++m) {
    Graph g = Graph::with_vertices(4);
    int bit = 0;
    for (Vertex i = 0; i < 4; ++i)
      for (Vertex j = i + 1; j < 4; ++j, ++bit)
        if (m >> bit & 1u) g.add_edge(i, j);
    forms.insert(canonical_form(g));
  }
  CHECK(forms.size() == 11);
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
  for (std::size_t n = 0; n <= 7; ++n) {
    std::map<CanonicalForm, std::uint64_t> seen;
    for (const Graph& g : oracle::graphs_on(n)) REQUIRE(seen.emplace(canonical_form(g), oracle::brute_code(g)).second);
  }
  // random relabelings keep the form; the brute-force code decides isomorphism
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(8, 0.45, trial), h = random_graph(8, 0.45, trial + 1000);
    std::vector<Vertex> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    REQUIRE(canonical_form(relabel(g, perm)) == canonical_form(g));
    REQUIRE((canonical_form(g) == canonical_form(h)) == (oracle::brute_code(g) == oracle::brute_code(h)));
  }
}

TEST_CASE("canonical form on regular graphs") {
  CHECK(isomorphic(cubic_graph("prism"), relabel(cubic_graph("prism"), {3, 4, 5, 0, 1, 2})));
  CHECK_FALSE(isomorphic(cubic_graph("prism"), cubic_graph("K33")));
  CHECK_FALSE(isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
}

TEST_CASE("solver examples") {
  auto r = solve(complete_graph(3), induced({"K3"}), 1);
  REQUIRE(r);
  CHECK(r->size() == 1);
  CHECK(isomorphic(r->current(), path_graph(4)));
  CHECK(verify_certificate(*r, induced({"K3"}), 1));
  CHECK_FALSE(verify_certificate(*r, induced({"K3"}), 0));
  CHECK(verify_certificate(*r, induced({"K3"}), 0).reason.find("budget") == 0);
  CHECK_FALSE(verify_certificate(SplittingSequence(complete_graph(3)), induced({"K3"}), 2));

  const Graph k3k1 = disjoint_union(complete_graph(3), complete_graph(1));
  CHECK_FALSE(solve(k3k1, induced({"P3", "K3"}), 2));
  auto three = solve(k3k1, induced({"P3", "K3"}), 3);
  REQUIRE(three);
  CHECK(three->size() == 3);

  CHECK(solve(path_graph(3), induced({"P3"}), 1));
  CHECK(min_splits(k3k1, induced({"P3", "K3"}), 5) == 3u);
  CHECK_THROWS_AS(solve(complete_graph(10), induced({"K3"}), 3), CapExceeded);
  CHECK_FALSE(solve(complete_graph(2), ForbiddenFamily::finite({Graph()}), 3));
}

TEST_CASE("verify_certificate reports the failing condition") {
  const Graph g = complete_graph(3);
  const std::vector<SplitSpec> bad = {{0, {1}, {}, 3, 4}};
  CHECK(verify_certificate(g, bad, induced({"K3"}), 1).reason.find("step 0") == 0);
  const std::vector<SplitSpec> overlap = {{0, {1, 2}, {1}, 3, 4}};
  auto v = verify_certificate(g, overlap, induced({"K3"}), 1, SolveMode::disjoint);
  CHECK_FALSE(v);
  CHECK(v.reason.find("mode") == 0);
  const std::vector<SplitSpec> useless = {{0, {1, 2}, {}, 3, 4}};
  CHECK(verify_certificate(g, useless, induced({"K3"}), 1).reason.find("not free") == 0);
}

TEST_CASE("soundness, monotonicity and mode nesting") {
  const std::vector<ForbiddenFamily> fams = {induced({"K3"}), induced({"P3"}), induced({"P3", "K3"}),
                                             induced({"coP3"}), induced({"K3", "coK3"})};
  for (const Graph& g : oracle::graphs_up_to(4)) {
    for (const ForbiddenFamily& f : fams) {
      bool prev_general = false, prev_disjoint = false, prev_shallow = false;
      for (std::size_t k = 0; k <= 3; ++k) {
        auto gen = solve(g, f, k, {SolveMode::general});
        auto dis = solve(g, f, k, {SolveMode::disjoint});
        auto sha = solve(g, f, k, {SolveMode::shallow});
        if (gen) REQUIRE(verify_certificate(*gen, f, k, SolveMode::general));
        if (dis) REQUIRE(verify_certificate(*dis, f, k, SolveMode::disjoint));
        if (sha) REQUIRE(verify_certificate(*sha, f, k, SolveMode::shallow));
        REQUIRE((!prev_general || gen));
        REQUIRE((!prev_disjoint || dis));
        REQUIRE((!prev_shallow || sha));
        REQUIRE((!sha || dis));
        REQUIRE((!dis || gen));
        prev_general = gen.has_value(), prev_disjoint = dis.has_value(), prev_shallow = sha.has_value();
      }
    }
  }
}

TEST_CASE("skipping trivial splits loses nothing") {
  const std::vector<ForbiddenFamily> fams = {induced({"K3"}), induced({"P3"}), induced({"coP3"}),
                                             induced({"P3", "coK3"}), induced({"coK2"}), induced({"K1"})};
  for (const Graph& g : oracle::graphs_up_to(5))
    for (const ForbiddenFamily& f : fams)
      for (std::size_t k = 0; k <= 2; ++k) {
        SolverOptions with{SolveMode::general, kCanonicalCap, true};
        REQUIRE(solve(g, f, k).has_value() == solve(g, f, k, with).has_value());
      }
}

TEST_CASE("disjoint and general minima coincide for {P3, K3}") {
  // final graphs of this family are closed under edge deletion, so duplicated
  // edges of a non-disjoint split can always be dropped
  const ForbiddenFamily f = induced({"P3", "K3"});
  for (const Graph& g : oracle::graphs_up_to(4)) {
    const auto gen = min_splits(g, f, 5, {SolveMode::general});
    const auto dis = min_splits(g, f, 5, {SolveMode::disjoint});
    REQUIRE(gen == dis);
  }
}

TEST_CASE("solver certificates are shortest") {
  // against an independent depth-limited enumeration over all splits
  const ForbiddenFamily f = induced({"P3"});
  const std::vector<Graph> pats = {pattern_graph("P3")};
  std::function<bool(const Graph&, std::size_t)> reachable = [&](const Graph& g, std::size_t k) {
    if (oracle::free_of(g, pats, true)) return true;
    if (k == 0) return false;
    for (Vertex v : g.vertices())
      for (const SplitSpec& s : enumerate_splits(g, v, SplitPolicy::all))
        if (reachable(apply_split(g, s), k - 1)) return true;
    return false;
  };
  for (const Graph& g : oracle::graphs_up_to(4))
    for (std::size_t k = 0; k <= 2; ++k) REQUIRE(solve(g, f, k).has_value() == reachable(g, k));
}

TEST_CASE("results are deterministic") {
  const Graph g = random_graph(6, 0.6, 4);
  auto a = solve(g, induced({"K3"}), 3), b = solve(g, induced({"K3"}), 3);
  REQUIRE(a.has_value() == b.has_value());
  if (a) CHECK(a->steps() == b->steps());
}
