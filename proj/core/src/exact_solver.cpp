#include "splitkit/exact_solver.hpp"

#include <unordered_set>

#include "splitkit/error.hpp"

namespace splitkit {

const char* to_string(SolveMode m) {
  switch (m) {
    case SolveMode::general: return "general";
    case SolveMode::disjoint: return "disjoint";
    case SolveMode::shallow: return "shallow";
  }
  return "?";
}

SolveMode parse_solve_mode(const std::string& s) {
  if (s == "general") return SolveMode::general;
  if (s == "disjoint" || s == "disjoint-only") return SolveMode::disjoint;
  if (s == "shallow") return SolveMode::shallow;
  throw Error("unknown mode '" + s + "' (expected general, disjoint or shallow)");
}

namespace {

struct Node {
  DenseGraph graph;  // color 1 marks vertices that may no longer be split (shallow mode)
  std::vector<Vertex> ids;
  Vertex next_id = 0;
  std::size_t parent = 0;
  SplitSpec step;
};

SplitPolicy policy_for(const SolverOptions& o) {
  bool disjoint = o.mode != SolveMode::general;
  if (o.allow_trivial) return disjoint ? SplitPolicy::disjoint : SplitPolicy::all;
  return disjoint ? SplitPolicy::disjoint_nontrivial : SplitPolicy::nontrivial;
}

class Search {
 public:
  Search(const ForbiddenFamily& family, const SolverOptions& options, SolveStats* stats)
      : family_(family), options_(options), policy_(policy_for(options)), stats_(stats) {}

  std::optional<std::vector<SplitSpec>> run(const Graph& g, std::size_t k) {
    Node root;
    root.graph = to_dense(g, &root.ids);
    root.next_id = g.next_free_id();
    if (is_free(root.graph, family_)) return std::vector<SplitSpec>{};
    if (family_.forbids_empty_graph()) return std::nullopt;
    layers_.push_back({std::move(root)});
    seen_.insert(canonical_form(layers_[0][0].graph));
    for (std::size_t depth = 1; depth <= k; ++depth) {
      const bool last = depth == k;
      std::vector<Node> next;
      for (std::size_t i = 0; i < layers_.back().size(); ++i) {
        if (auto found = expand(i, last, next)) return found;
      }
      if (next.empty()) break;
      layers_.push_back(std::move(next));
    }
    return std::nullopt;
  }

 private:
  // Generates all children of node i of the last layer. Returns a certificate as
  // soon as one child is free; otherwise stores the unseen children (unless last).
  std::optional<std::vector<SplitSpec>> expand(std::size_t i, bool last, std::vector<Node>& next) {
    const Node& node = layers_.back()[i];
    const DenseGraph& g = node.graph;
    const std::size_t n = g.size();
    if (stats_) ++stats_->expanded;
    for (std::size_t t = 0; t < n; ++t) {
      if (g.color[t] != 0) continue;
      std::vector<std::size_t> nbrs;
      for (Mask m = g.adj[t]; m; m &= m - 1) nbrs.push_back(lowest(m));
      for (auto [a1, a2] : split_assignments(nbrs.size(), policy_)) {
        Mask p1 = 0, p2 = 0;
        for (std::size_t j = 0; j < nbrs.size(); ++j) {
          if (a1 & bit(j)) p1 |= bit(nbrs[j]);
          if (a2 & bit(j)) p2 |= bit(nbrs[j]);
        }
        DenseGraph child = g;
        child.adj.push_back(0);
        child.color.push_back(0);
        for (Mask m = g.adj[t]; m; m &= m - 1) child.adj[lowest(m)] &= ~bit(t);
        child.adj[t] = p1;
        child.adj[n] = p2;
        for (Mask m = p1; m; m &= m - 1) child.adj[lowest(m)] |= bit(t);
        for (Mask m = p2; m; m &= m - 1) child.adj[lowest(m)] |= bit(n);
        if (options_.mode == SolveMode::shallow) child.color[t] = child.color[n] = 1;
        if (stats_) ++stats_->generated;
        if (is_free(child, family_)) {
          auto steps = path_to(layers_.size() - 1, i);
          steps.push_back(spec(node, t, p1, p2));
          return steps;
        }
        if (last) continue;
        if (!seen_.insert(canonical_form(child)).second) {
          if (stats_) ++stats_->duplicates;
          continue;
        }
        Node c;
        c.graph = std::move(child);
        c.ids = node.ids;
        c.ids[t] = node.next_id;
        c.ids.push_back(node.next_id + 1);
        c.next_id = node.next_id + 2;
        c.parent = i;
        c.step = spec(node, t, p1, p2);
        next.push_back(std::move(c));
      }
    }
    return std::nullopt;
  }

  static SplitSpec spec(const Node& node, std::size_t t, Mask p1, Mask p2) {
    SplitSpec s;
    s.target = node.ids[t];
    for (Mask m = p1; m; m &= m - 1) s.part1.insert(node.ids[lowest(m)]);
    for (Mask m = p2; m; m &= m - 1) s.part2.insert(node.ids[lowest(m)]);
    s.child1 = node.next_id;
    s.child2 = node.next_id + 1;
    return s;
  }

  std::vector<SplitSpec> path_to(std::size_t layer, std::size_t index) const {
    std::vector<SplitSpec> out(layer);
    for (std::size_t l = layer; l > 0; --l) {
      const Node& n = layers_[l][index];
      out[l - 1] = n.step;
      index = n.parent;
    }
    return out;
  }

  const ForbiddenFamily& family_;
  const SolverOptions& options_;
  SplitPolicy policy_;
  SolveStats* stats_;
  std::vector<std::vector<Node>> layers_;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen_;
};

}  // namespace

std::optional<SplittingSequence> solve(const Graph& g, const ForbiddenFamily& family, std::size_t k,
                                       const SolverOptions& options, SolveStats* stats) {
  const std::size_t cap = std::min(options.cap, kDenseLimit);
  if (g.vertex_count() + k > cap) throw CapExceeded("exact search (|V| + k)", g.vertex_count() + k, cap);
  auto steps = Search(family, options, stats).run(g, k);
  if (!steps) return std::nullopt;
  return SplittingSequence(g, *steps);
}

std::optional<std::size_t> min_splits(const Graph& g, const ForbiddenFamily& family, std::size_t k_max,
                                      const SolverOptions& options) {
  auto seq = solve(g, family, k_max, options);
  if (!seq) return std::nullopt;
  return seq->size();
}

Verdict verify_certificate(const SplittingSequence& seq, const ForbiddenFamily& family, std::size_t k,
                           SolveMode mode) {
  if (seq.size() > k)
    return {false, "budget: " + std::to_string(seq.size()) + " splits exceed k = " + std::to_string(k)};
  if (mode != SolveMode::general && !seq.all_disjoint()) return {false, "mode: sequence uses a non-disjoint split"};
  if (mode == SolveMode::shallow && !seq.shallow()) return {false, "mode: some vertex is split twice"};
  try {
    if (!is_free(seq.current(), family)) return {false, "not free: final graph still contains a forbidden graph"};
  } catch (const CapExceeded& e) {
    return {false, std::string("refused: ") + e.what()};
  }
  return {true, "ok"};
}

Verdict verify_certificate(const Graph& g, const std::vector<SplitSpec>& steps, const ForbiddenFamily& family,
                           std::size_t k, SolveMode mode) {
  SplittingSequence seq(g);
  for (const SplitSpec& s : steps) {
    try {
      seq.push(s);
    } catch (const SequenceError& e) {
      return {false, e.what()};
    }
  }
  return verify_certificate(seq, family, k, mode);
}

}  // namespace splitkit
