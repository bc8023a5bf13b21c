#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitkit/catalog.hpp"
#include "splitkit/family.hpp"
#include "splitkit/graph.hpp"
#include "splitkit/split.hpp"

namespace splitkit {

using SkeletonArc = std::pair<Vertex, Vertex>;  // (tail, head)

/// A graph h with two distinct ends a, b and a split of each end:
/// a1set ∪ a2set = N(a), b1set ∪ b2set = N(b), none of the four sets empty.
struct SplittingConfiguration {
  Graph h;
  Vertex a = 0;
  VertexSet a1set, a2set;
  Vertex b = 0;
  VertexSet b1set, b2set;

  /// Throws Error describing the first violated condition.
  void validate() const;
  bool disjoint() const;
};

/// Disjoint configuration splitting each end into its smallest neighbour and
/// the remaining neighbours. Both ends need degree at least two.
SplittingConfiguration neighbour_configuration(const Graph& h, Vertex a, Vertex b);

/// Smaller of the distances between the two descendants after splitting only a,
/// or only b; nothing when both splits disconnect their descendants.
std::optional<std::size_t> width(const SplittingConfiguration& c);

struct ConstrResult {
  Graph graph;
  std::map<Vertex, VertexSet> chi_vertex;
  std::map<SkeletonArc, VertexSet> chi_arc;
  /// Gadget-local id (arc index * stride + local index) of every glued copy
  /// vertex, mapped to the vertex it became. Local indices 0..|h|-1 follow the
  /// ascending ids of h; |h|, |h|+1 are a1, a2 and |h|+2, |h|+3 are b1, b2.
  std::map<std::size_t, Vertex> glue;
  std::size_t stride = 0;
};

/// One copy of c.h per arc, ends split for skeleton vertices in s, glued at
/// the ends. Vertex ids are compact, ordered by their smallest gadget-local id.
ConstrResult constr(const DiGraph& skeleton, const SplittingConfiguration& c, const VertexSet& s);

/// Splitting sequence from constr(∅) whose i-th step splits the end of order[i];
/// its final graph equals constr(set of order) up to the ids of split vertices.
SplittingSequence constr_sequence(const DiGraph& skeleton, const SplittingConfiguration& c,
                                  const std::vector<Vertex>& order);

/// Skeleton vertex cover read off a sequence starting at res.graph: each split
/// vertex is traced to its initial ancestor, which maps to the skeleton vertex
/// whose end it is, or else to the smaller endpoint of its gadget's arc.
VertexSet extract_vertex_cover(const SplittingSequence& seq, const ConstrResult& res, const DiGraph& skeleton);

/// 2·max diameter over a finite family of connected patterns.
std::size_t subdivision_parameter(const ForbiddenFamily& family);

struct VcInstance {
  Subdivision sub;
  std::size_t k = 0;
};

/// (subdivide(g, 2ℓ), k + ℓ|E(g)|); g must be 3-regular.
VcInstance subdivided_vc_instance(const Graph& g, std::size_t ell, std::size_t k);

/// Cover of g extended along every subdivided edge by ℓ alternate path vertices.
VertexSet forward_vc_map(const Graph& g, const Subdivision& sub, const VertexSet& cover);
/// Cover of the subdivision contracted back to a cover of g, at least ℓ smaller
/// per edge.
VertexSet backward_vc_map(const Graph& g, const Subdivision& sub, const VertexSet& cover);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);

/// Number of vertices subdividing every edge when g is a uniform subdivision of
/// a simple cubic graph.
std::optional<std::size_t> cubic_subdivision_length(const Graph& g);

struct ReductionInstance {
  Graph graph;
  std::size_t k = 0;
  std::vector<std::string> warnings;
  /// Gadget map over the ascending orientation of g, as for constr:
  /// {v} per vertex and the edge's gadget vertices per arc.
  std::map<Vertex, VertexSet> chi_vertex;
  std::map<SkeletonArc, VertexSet> chi_arc;
};

/// One fresh apex per edge of g, adjacent to both endpoints.
ReductionInstance bipartite_reduction(const Graph& g, std::size_t k);
/// One fresh path u c1 c2 c3 v per edge uv of g.
ReductionInstance perfect_reduction(const Graph& g, std::size_t k);

struct ParaNpInstance {
  Graph base;
  Graph graph;
  std::size_t k = 0;
  std::array<std::map<Vertex, Vertex>, 3> copies;  // base vertex -> instance vertex
  Vertex apex = 0;
  std::vector<std::array<Vertex, 3>> triangles;
};

/// Three disjoint copies of a triangle-free g, a vertex adjacent to all of them,
/// and k - 2 disjoint triangles.
ParaNpInstance paranp_reduction(const Graph& g, std::size_t k);

using Coloring = std::map<Vertex, int>;  // colours 1..3

bool is_proper_coloring(const Graph& g, const Coloring& c, int colours = 3);

/// Splits the apex into colour class 1 and the rest, then the rest into 2 and 3,
/// then breaks each extra triangle.
SplittingSequence coloring_to_sequence(const ParaNpInstance& inst, const Coloring& coloring);

/// Colouring of the base graph read from a copy with no split vertex: v gets the
/// rank of the smallest apex descendant adjacent to it. Nothing when the final
/// graph still has a triangle.
std::optional<Coloring> sequence_to_coloring(const SplittingSequence& seq, const ParaNpInstance& inst);

}  // namespace splitkit
