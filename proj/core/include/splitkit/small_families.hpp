#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "splitkit/family.hpp"
#include "splitkit/graph.hpp"
#include "splitkit/split.hpp"

namespace splitkit {

/// The eight graphs on at most three vertices.
enum class SmallGraph : std::uint8_t { K0, K1, K2, coK2, K3, coK3, P3, coP3 };

inline constexpr std::array<SmallGraph, 8> kSmallGraphs = {SmallGraph::K0, SmallGraph::K1,  SmallGraph::K2,
                                                           SmallGraph::coK2, SmallGraph::K3, SmallGraph::coK3,
                                                           SmallGraph::P3, SmallGraph::coP3};

Graph small_graph(SmallGraph s);
std::string to_string(SmallGraph s);

/// A subset of the eight small graphs, stored as a bitmask.
class SmallFamily {
 public:
  constexpr SmallFamily() = default;
  SmallFamily(std::initializer_list<SmallGraph> members);
  static SmallFamily from_bits(std::uint8_t bits);

  bool has(SmallGraph s) const { return bits_ & mask(s); }
  void insert(SmallGraph s) { bits_ |= mask(s); }
  std::uint8_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  /// Contains K0, K1, K2 or coK2.
  bool has_tiny_member() const { return bits_ & 0x0f; }

  ForbiddenFamily forbidden() const;
  std::string to_string() const;

  friend bool operator==(SmallFamily, SmallFamily) = default;

 private:
  static std::uint8_t mask(SmallGraph s) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(s)); }
  std::uint8_t bits_ = 0;
};

/// Recognizes a finite induced family whose members are all small graphs.
bool as_small_family(const ForbiddenFamily& f, SmallFamily& out);

enum class Decision { yes, no, np_hard };
std::string to_string(Decision d);

/// Which rule decided a dispatch.
enum class Route {
  forbids_k0,
  forbids_k1,
  forbids_k2,
  forbids_co_k2,
  empty_family,
  np_hard_case,
  indestructible,       // members cannot be destroyed: decide (G, 0)
  co_p3_introduction,   // destroying P3 or K3 creates coP3: decide (G, 0)
  ramsey,
  p3_k3_count,
  p3_co_k3_midpoints,
};
std::string to_string(Route r);

struct DispatchResult {
  Decision decision = Decision::no;
  Route route = Route::empty_family;
};

/// Polynomial decision for every family of graphs on at most three vertices,
/// except {P3} and {K3}, which return Decision::np_hard.
DispatchResult dispatch(const SmallFamily& family, const Graph& g, std::size_t k);

/// Minimum number of splits into a disjoint union of edges and isolated vertices:
/// 2|E| + |I| - |V|.
std::size_t p3_k3_threshold(const Graph& g);
bool solve_p3_k3(const Graph& g, std::size_t k);
/// A sequence of exactly p3_k3_threshold(g) disjoint splits ending in a {P3, K3}-free graph.
SplittingSequence p3_k3_certificate(const Graph& g);

/// Vertices that are the middle of some induced P3.
VertexSet midpoints(const Graph& g);
/// Reject on coK3, accept without P3, else accept iff the midpoints form a clique
/// of size <= k. Wrong on P4 and similar graphs; kept for comparison.
bool midpoint_rule_p3_co_k3(const Graph& g, std::size_t k);
/// The midpoint rule plus a check that the midpoints split g into two
/// overlapping cliques; exact.
bool solve_p3_co_k3(const Graph& g, std::size_t k);

using CliqueCover = std::vector<VertexSet>;
std::size_t scc_weight(const CliqueCover& cover);
bool verify_scc(const Graph& g, const CliqueCover& cover);

inline constexpr std::size_t kSccCap = 8;
/// Minimum weight of a sigma clique cover, by exhaustive branch and bound.
std::size_t min_scc_weight(const Graph& g, std::size_t cap = kSccCap);
/// A cover attaining min_scc_weight.
CliqueCover min_scc(const Graph& g, std::size_t cap = kSccCap);

/// R(3): every graph on six vertices contains K3 or coK3.
inline constexpr std::size_t kRamsey3 = 6;
/// For families containing K3 and coK3: reject from six vertices on, else search
/// all sequences of at most min(k, 5 - |V|) splits.
bool solve_ramsey_k3(const Graph& g, std::size_t k, const SmallFamily& family);

ForbiddenFamily threshold_family();
ForbiddenFamily split_graph_family();
bool recognize_threshold(const Graph& g);
bool recognize_split(const Graph& g);
bool solve_threshold_vs(const Graph& g, std::size_t k);
bool solve_split_vs(const Graph& g, std::size_t k);

}  // namespace splitkit
