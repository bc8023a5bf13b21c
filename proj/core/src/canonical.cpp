#include "splitkit/canonical.hpp"

#include <algorithm>

#include "splitkit/error.hpp"

namespace splitkit {

std::string CanonicalForm::bytes() const {
  std::string out;
  out.reserve(words.size() * 8);
  for (std::uint64_t w : words)
    for (int b = 7; b >= 0; --b) out.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
  return out;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& c) const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t w : c.words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

namespace {

using Partition = std::vector<std::vector<std::size_t>>;

class Canonizer {
 public:
  explicit Canonizer(const DenseGraph& g) : g_(g), n_(g.size()) {}

  CanonicalForm run() {
    Partition p;
    if (n_ > 0) {
      std::vector<std::size_t> order(n_);
      for (std::size_t i = 0; i < n_; ++i) order[i] = i;
      auto key = [&](std::size_t v) { return std::pair(g_.color[v], g_.degree(v)); };
      std::sort(order.begin(), order.end(), [&](auto a, auto b) { return key(a) < key(b); });
      for (std::size_t v : order) {
        if (p.empty() || key(p.back().front()) != key(v)) p.emplace_back();
        p.back().push_back(v);
      }
    }
    search(refine(std::move(p)));
    return CanonicalForm{best_};
  }

 private:
  Partition refine(Partition p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Mask> cell_mask(p.size(), 0);
      for (std::size_t c = 0; c < p.size(); ++c)
        for (std::size_t v : p[c]) cell_mask[c] |= bit(v);
      Partition next;
      for (const auto& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, std::size_t>> sig;
        for (std::size_t v : cell) {
          std::vector<int> s(p.size());
          for (std::size_t c = 0; c < p.size(); ++c) s[c] = popcount(g_.adj[v] & cell_mask[c]);
          sig.emplace_back(std::move(s), v);
        }
        std::sort(sig.begin(), sig.end());
        std::size_t first = next.size();
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i == 0 || sig[i].first != sig[i - 1].first) next.emplace_back();
          next.back().push_back(sig[i].second);
        }
        if (next.size() - first > 1) changed = true;
      }
      p = std::move(next);
    }
    return p;
  }

  std::vector<std::uint64_t> code(const Partition& p) const {
    std::vector<std::size_t> perm;
    for (const auto& cell : p) perm.push_back(cell.front());
    std::vector<std::uint64_t> out;
    out.reserve(2 * n_ + 1);
    out.push_back(n_);
    for (std::size_t v : perm) out.push_back(g_.color[v]);
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint64_t row = 0;
      for (std::size_t j = 0; j < n_; ++j)
        if (g_.adjacent(perm[i], perm[j])) row |= std::uint64_t{1} << (n_ - 1 - j);
      out.push_back(row);
    }
    return out;
  }

  bool twins(std::size_t x, std::size_t y) const {
    return g_.color[x] == g_.color[y] && (g_.adj[x] & ~bit(y)) == (g_.adj[y] & ~bit(x));
  }

  void search(const Partition& p) {
    auto target = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
    if (target == p.end()) {
      auto c = code(p);
      if (best_.empty() || c < best_) best_ = std::move(c);
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(target - p.begin());
    std::vector<std::size_t> tried;
    for (std::size_t v : *target) {
      // swapping v with an already tried twin is an automorphism fixing p
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Partition q;
      q.reserve(p.size() + 1);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (c != idx) {
          q.push_back(p[c]);
          continue;
        }
        q.push_back({v});
        std::vector<std::size_t> rest;
        for (std::size_t w : p[c])
          if (w != v) rest.push_back(w);
        q.push_back(std::move(rest));
      }
      search(refine(std::move(q)));
    }
  }

  const DenseGraph& g_;
  std::size_t n_;
  std::vector<std::uint64_t> best_;
};

}  // namespace

CanonicalForm canonical_form(const DenseGraph& g) {
  if (g.size() == 0) return CanonicalForm{{0}};
  return Canonizer(g).run();
}

CanonicalForm canonical_form(const Graph& g, std::size_t cap) {
  if (g.vertex_count() > cap) throw CapExceeded("canonical form", g.vertex_count(), cap);
  return canonical_form(to_dense(g));
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::size_t cap = std::max<std::size_t>(a.vertex_count(), 1);
  return canonical_form(a, cap) == canonical_form(b, cap);
}

}  // namespace splitkit
