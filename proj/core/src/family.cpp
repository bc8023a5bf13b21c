#include "splitkit/family.hpp"

#include "splitkit/error.hpp"

namespace splitkit {

ForbiddenFamily ForbiddenFamily::finite(std::vector<Graph> patterns, EmbedMode mode) {
  ForbiddenFamily f;
  f.kind_ = FamilyKind::finite;
  f.mode_ = mode;
  for (const Graph& p : patterns) f.dense_.push_back(to_dense(compacted(p).graph));
  f.patterns_ = std::move(patterns);
  return f;
}

ForbiddenFamily ForbiddenFamily::odd_cycles() {
  ForbiddenFamily f;
  f.kind_ = FamilyKind::odd_cycles;
  return f;
}

ForbiddenFamily ForbiddenFamily::odd_holes_antiholes(std::size_t cap) {
  ForbiddenFamily f;
  f.kind_ = FamilyKind::odd_holes_antiholes;
  f.perfect_cap_ = cap;
  return f;
}

bool ForbiddenFamily::forbids_empty_graph() const {
  if (kind_ != FamilyKind::finite) return false;
  for (const Graph& p : patterns_)
    if (p.empty()) return true;
  return false;
}

bool is_free(const DenseGraph& host, const ForbiddenFamily& family) {
  switch (family.kind()) {
    case FamilyKind::odd_cycles:
      return dense_bipartite(host);
    case FamilyKind::odd_holes_antiholes:
      if (host.size() > family.perfect_cap())
        throw CapExceeded("perfectness check", host.size(), family.perfect_cap());
      return !dense_has_odd_hole_or_antihole(host);
    case FamilyKind::finite:
      break;
  }
  const bool induced = family.mode() == EmbedMode::induced;
  for (const DenseGraph& p : family.dense_patterns())
    if (dense_contains(p, host, induced)) return false;
  return true;
}

bool is_free(const Graph& host, const ForbiddenFamily& family) {
  if (host.vertex_count() <= kDenseLimit) return is_free(to_dense(host), family);
  if (family.kind() != FamilyKind::finite) return is_free(to_dense(host), family);  // throws CapExceeded
  for (const Graph& p : family.patterns())
    if (embeds(p, host, family.mode())) return false;
  return true;
}

}  // namespace splitkit
