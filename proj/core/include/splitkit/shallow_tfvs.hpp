#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "splitkit/graph.hpp"
#include "splitkit/properties.hpp"
#include "splitkit/split.hpp"
#include "splitkit/two_sat.hpp"

namespace splitkit {

/// Directed edge variable: true means the edge tail-head is attached to the
/// second descendant of `head` if `head` is split.
using Arc = std::pair<Vertex, Vertex>;  // (tail, head)

/// Variables of the encoding: one per vertex, two per edge.
struct VariableSet {
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;  // for each edge u < v: (u, v) then (v, u)

  std::size_t size() const { return vertices.size() + arcs.size(); }
};
VariableSet variables_of(const Graph& g);

/// Conjunction over the triangles (a, b, c), a < b < c, of
/// (a ∧ (ba ⊕ ca)) ∨ (b ∧ (ab ⊕ cb)) ∨ (c ∧ (ac ⊕ bc)).
struct Psi {
  std::vector<Triangle> triangles;
};
Psi build_psi(const Graph& g);

/// The set of true variables.
struct Interpretation {
  VertexSet vertices;
  std::set<Arc> arcs;

  bool holds(Vertex v) const { return vertices.count(v) != 0; }
  bool holds(const Arc& a) const { return arcs.count(a) != 0; }
};

bool evaluate_phi(const Triangle& t, const Interpretation& i);
bool evaluate(const Psi& psi, const Interpretation& i);

/// G split according to I. Each v ∈ I ∩ V becomes child1 (edges whose arc
/// into v is false) and child2 (arc true); children of the k-th split vertex in
/// ascending order get ids base + 2k and base + 2k + 1 with base = g.next_free_id().
Graph interpretation_to_graph(const Graph& g, const Interpretation& i);
/// The same graph produced by disjoint splits in ascending vertex order.
SplittingSequence interpretation_to_sequence(const Graph& g, const Interpretation& i);

/// Vertex sets of size <= k meeting every triangle, drawn from the triangle
/// vertices, in lexicographic order. Stops when `visit` returns false.
void for_each_hitting_set(const std::vector<Triangle>& tris, std::size_t k,
                          const std::function<bool(const VertexSet&)>& visit);
std::vector<VertexSet> enumerate_hitting_sets(const std::vector<Triangle>& tris, std::size_t k);

/// Arc variables inside G[S]; these are guessed rather than left to 2-SAT.
std::vector<Arc> guessed_arcs(const Graph& g, const VertexSet& s);

/// A literal over an arc variable.
struct ArcLit {
  Arc arc;
  bool positive = true;
  friend auto operator<=>(const ArcLit&, const ArcLit&) = default;
};

/// Clauses with one or two literals over the arc variables not fixed by the guess.
struct TwoSatInstance {
  std::vector<std::vector<ArcLit>> clauses;
  bool contradiction = false;  // some fully fixed triangle evaluated to false
};

/// Simplifies ψ under S (true vertex variables; all others false) and the guessed
/// arc values. Throws on a non-hitting S or a guess not covering exactly guessed_arcs.
TwoSatInstance reduce_to_2sat(const Graph& g, const Psi& psi, const VertexSet& s, const std::map<Arc, bool>& guess);

/// Satisfying values for the arcs occurring in the instance, or nothing.
std::optional<std::map<Arc, bool>> two_sat_solve(const TwoSatInstance& inst);

struct ShallowResult {
  Interpretation model;
  SplittingSequence sequence;
};

struct ShallowStats {
  std::size_t hitting_sets = 0;
  std::size_t guesses = 0;
  std::size_t two_sat_calls = 0;
};

/// Decides whether at most k splits, each initial vertex split at most once,
/// make g triangle-free. Returns a model and its verified split sequence.
std::optional<ShallowResult> solve_shallow_tfvs(const Graph& g, std::size_t k, ShallowStats* stats = nullptr);

/// `v <id>` and `e <u> <v> -> <head>` lines, one per true variable.
void write_model(std::ostream& out, const Interpretation& i);

}  // namespace splitkit
