#include "splitkit/two_sat.hpp"

#include <algorithm>

namespace splitkit {

void TwoSat::add_clause(Lit a, Lit b) {
  touch(a.var);
  touch(b.var);
  clauses_.emplace_back(a, b);
}

void TwoSat::add_unit(Lit a) {
  touch(a.var);
  units_.push_back(a);
}

namespace {

std::size_t node(Lit l) { return 2 * l.var + (l.negated ? 1 : 0); }

}  // namespace

std::optional<std::vector<bool>> TwoSat::solve() const {
  if (has_false_) return std::nullopt;
  const std::size_t n = 2 * vars_;

  // implication graph in CSR form: (a ∨ b) gives ¬a → b and ¬b → a; a unit l gives ¬l → l
  std::vector<std::size_t> degree(n + 1, 0);
  auto each_edge = [&](auto&& f) {
    for (auto [a, b] : clauses_) {
      f(node(~a), node(b));
      f(node(~b), node(a));
    }
    for (Lit l : units_) f(node(~l), node(l));
  };
  each_edge([&](std::size_t from, std::size_t) { ++degree[from + 1]; });
  for (std::size_t i = 0; i < n; ++i) degree[i + 1] += degree[i];
  std::vector<std::size_t> target(degree[n]);
  std::vector<std::size_t> fill(degree.begin(), degree.end() - 1);
  each_edge([&](std::size_t from, std::size_t to) { target[fill[from]++] = to; });

  // iterative Tarjan; components are numbered in reverse topological order
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<std::size_t> stack, call, cursor(n, 0);
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0, components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back(root);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    cursor[root] = degree[root];
    while (!call.empty()) {
      std::size_t v = call.back();
      if (cursor[v] < degree[v + 1]) {
        std::size_t w = target[cursor[v]++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          cursor[w] = degree[w];
          call.push_back(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
    }
  }

  std::vector<bool> value(vars_);
  for (std::size_t v = 0; v < vars_; ++v) {
    std::size_t t = comp[2 * v], f = comp[2 * v + 1];
    if (t == f) return std::nullopt;
    // x is true when its component comes later in topological order than ¬x's
    value[v] = t < f;
  }
  return value;
}

}  // namespace splitkit
