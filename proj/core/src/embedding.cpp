#include "splitkit/embedding.hpp"

namespace splitkit {

namespace {

struct Search {
  Search(const Graph& p, const Graph& h, EmbedMode m, const std::function<bool(const Embedding&)>& v)
      : pattern(p), host(h), mode(m), visit(v) {}

  const Graph& pattern;
  const Graph& host;
  EmbedMode mode;
  const std::function<bool(const Embedding&)>& visit;
  std::vector<Vertex> pv = pattern.vertices();
  std::vector<Vertex> hv = host.vertices();
  Embedding current;
  VertexSet used;

  bool fits(Vertex p, Vertex h) const {
    if (host.degree(h) < pattern.degree(p)) return false;
    for (const auto& [q, image] : current) {
      bool want = pattern.adjacent(p, q);
      bool have = host.adjacent(h, image);
      if (want && !have) return false;
      if (!want && have && mode == EmbedMode::induced) return false;
    }
    return true;
  }

  // Returns false once the visitor asked to stop.
  bool run(std::size_t depth) {
    if (depth == pv.size()) return visit(current);
    Vertex p = pv[depth];
    for (Vertex h : hv) {
      if (used.count(h) || !fits(p, h)) continue;
      current[p] = h;
      used.insert(h);
      bool go_on = run(depth + 1);
      used.erase(h);
      current.erase(p);
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_embedding(const Graph& pattern, const Graph& host, EmbedMode mode,
                        const std::function<bool(const Embedding&)>& visit) {
  if (pattern.vertex_count() > host.vertex_count()) return;
  Search s(pattern, host, mode, visit);
  s.run(0);
}

std::vector<Embedding> enumerate_embeddings(const Graph& pattern, const Graph& host, EmbedMode mode) {
  std::vector<Embedding> out;
  for_each_embedding(pattern, host, mode, [&](const Embedding& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

bool embeds(const Graph& pattern, const Graph& host, EmbedMode mode) {
  bool found = false;
  for_each_embedding(pattern, host, mode, [&](const Embedding&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace splitkit
