#include "splitkit/split.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "splitkit/error.hpp"

namespace splitkit {

bool SplitSpec::disjoint() const {
  return std::none_of(part1.begin(), part1.end(), [&](Vertex v) { return part2.count(v) != 0; });
}

void check_split(const Graph& g, const SplitSpec& s) {
  if (!g.has_vertex(s.target)) throw InvalidSplit("split target " + std::to_string(s.target) + " is not in the graph");
  if (s.child1 == s.child2) throw InvalidSplit("split children must be distinct");
  for (Vertex c : {s.child1, s.child2})
    if (g.has_vertex(c) || c == s.target) throw InvalidSplit("child id " + std::to_string(c) + " is already in use");
  VertexSet cover = s.part1;
  cover.insert(s.part2.begin(), s.part2.end());
  if (cover != g.neighbors(s.target))
    throw InvalidSplit("parts " + to_string(s.part1) + " and " + to_string(s.part2) + " do not cover N(" +
                       std::to_string(s.target) + ") = " + to_string(g.neighbors(s.target)));
}

void split_in_place(Graph& g, const SplitSpec& s) {
  check_split(g, s);
  g.remove_vertex(s.target);
  g.add_vertex(s.child1);
  g.add_vertex(s.child2);
  for (Vertex w : s.part1) g.add_edge(s.child1, w);
  for (Vertex w : s.part2) g.add_edge(s.child2, w);
}

Graph apply_split(const Graph& g, const SplitSpec& s) {
  Graph out = g;
  split_in_place(out, s);
  return out;
}

Graph merge(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw InvalidSplit("cannot merge a vertex with itself");
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw InvalidSplit("merge of an absent vertex");
  if (g.adjacent(u, v)) throw InvalidSplit("cannot merge adjacent vertices");
  Vertex fresh = g.next_free_id();
  VertexSet nbrs = g.neighbors(u);
  nbrs.insert(g.neighbors(v).begin(), g.neighbors(v).end());
  Graph out = g;
  out.remove_vertex(u);
  out.remove_vertex(v);
  out.add_vertex(fresh);
  for (Vertex w : nbrs) out.add_edge(fresh, w);
  return out;
}

namespace {

std::vector<std::pair<Mask, Mask>> build_assignments(std::size_t d, SplitPolicy policy) {
  const bool disjoint = policy == SplitPolicy::disjoint || policy == SplitPolicy::disjoint_nontrivial;
  const bool nontrivial = policy == SplitPolicy::nontrivial || policy == SplitPolicy::disjoint_nontrivial;
  const std::size_t base = disjoint ? 2 : 3;
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= base;
  std::vector<std::pair<Mask, Mask>> out;
  // digit 0: part1 only, 1: part2 only, 2: both
  for (std::size_t code = 0; code < total; ++code) {
    Mask p1 = 0, p2 = 0;
    std::size_t c = code;
    for (std::size_t i = 0; i < d; ++i, c /= base) {
      std::size_t digit = c % base;
      if (digit != 1) p1 |= bit(i);
      if (digit != 0) p2 |= bit(i);
    }
    Mask diff = p1 ^ p2;
    if (diff != 0 && (p1 & bit(lowest(diff))) == 0) continue;
    if (nontrivial && (p1 == 0 || p2 == 0)) continue;
    out.emplace_back(p1, p2);
  }
  return out;
}

}  // namespace

const std::vector<std::pair<Mask, Mask>>& split_assignments(std::size_t degree, SplitPolicy policy) {
  if (degree > 20) throw CapExceeded("split enumeration degree", degree, 20);
  static std::mutex lock;
  static std::map<std::pair<std::size_t, int>, std::vector<std::pair<Mask, Mask>>> cache;
  std::lock_guard guard(lock);
  auto key = std::pair(degree, static_cast<int>(policy));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_assignments(degree, policy)).first;
  return it->second;
}

std::vector<SplitSpec> enumerate_splits(const Graph& g, Vertex v, SplitPolicy policy) {
  if (!g.has_vertex(v)) throw InvalidSplit("vertex " + std::to_string(v) + " is not in the graph");
  std::vector<Vertex> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
  const Vertex c1 = g.next_free_id();
  std::vector<SplitSpec> out;
  for (auto [m1, m2] : split_assignments(nbrs.size(), policy)) {
    SplitSpec s{v, {}, {}, c1, c1 + 1};
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (m1 & bit(i)) s.part1.insert(nbrs[i]);
      if (m2 & bit(i)) s.part2.insert(nbrs[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

SplittingSequence::SplittingSequence(Graph initial) : initial_(std::move(initial)), current_(initial_) {}

SplittingSequence::SplittingSequence(Graph initial, const std::vector<SplitSpec>& steps)
    : SplittingSequence(std::move(initial)) {
  for (const SplitSpec& s : steps) push(s);
}

void SplittingSequence::push(const SplitSpec& s) {
  try {
    check_split(current_, s);
  } catch (const InvalidSplit& e) {
    throw SequenceError(steps_.size(), e.what());
  }
  // ids of vertices that existed earlier stay reserved so ancestry is unambiguous
  for (Vertex c : {s.child1, s.child2})
    if (initial_.has_vertex(c) || parent_.count(c))
      throw SequenceError(steps_.size(), "child id " + std::to_string(c) + " was used earlier in the sequence");
  split_in_place(current_, s);
  parent_[s.child1] = s.target;
  parent_[s.child2] = s.target;
  steps_.push_back(s);
}

Graph SplittingSequence::graph_at(std::size_t i) const {
  Graph g = initial_;
  for (std::size_t j = 0; j < i && j < steps_.size(); ++j) split_in_place(g, steps_[j]);
  return g;
}

Vertex SplittingSequence::parent(Vertex v) const {
  auto it = parent_.find(v);
  return it == parent_.end() ? v : it->second;
}

Vertex SplittingSequence::ancestor(Vertex v) const {
  for (auto it = parent_.find(v); it != parent_.end(); it = parent_.find(v)) v = it->second;
  return v;
}

bool SplittingSequence::descends_from(Vertex d, Vertex a) const {
  while (true) {
    if (d == a) return true;
    auto it = parent_.find(d);
    if (it == parent_.end()) return false;
    d = it->second;
  }
}

VertexSet SplittingSequence::current_descendants(Vertex a) const {
  VertexSet out;
  for (Vertex v : current_.vertices())
    if (descends_from(v, a)) out.insert(v);
  return out;
}

std::set<Edge> SplittingSequence::descendant_edges(const Edge& e) const {
  std::set<Edge> out;
  for (Vertex x : current_descendants(e.first))
    for (Vertex y : current_.neighbors(x))
      if (descends_from(y, e.second)) out.emplace(x, y);
  return out;
}

bool SplittingSequence::all_disjoint() const {
  return std::all_of(steps_.begin(), steps_.end(), [](const SplitSpec& s) { return s.disjoint(); });
}

std::map<Vertex, std::size_t> SplittingSequence::split_counts() const {
  std::map<Vertex, std::size_t> out;
  for (const SplitSpec& s : steps_) ++out[ancestor(s.target)];
  return out;
}

bool SplittingSequence::shallow() const {
  for (const auto& [_, c] : split_counts())
    if (c > 1) return false;
  return true;
}

Graph apply_sequence(const Graph& initial, const std::vector<SplitSpec>& steps) {
  return SplittingSequence(initial, steps).current();
}

Graph apply_sequence(const SplittingSequence& seq) { return seq.current(); }

}  // namespace splitkit
