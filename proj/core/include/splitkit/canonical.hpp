#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "splitkit/dense.hpp"
#include "splitkit/graph.hpp"

namespace splitkit {

inline constexpr std::size_t kCanonicalCap = 12;

/// Isomorphism-invariant code: equal iff the (colored) graphs are isomorphic.
struct CanonicalForm {
  std::vector<std::uint64_t> words;

  /// Byte-string view of the code.
  std::string bytes() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const;
};

/// Minimum code over all labelings that respect colors, found by partition
/// refinement with individualization; interchangeable twins are explored once.
CanonicalForm canonical_form(const DenseGraph& g);

/// Throws CapExceeded when the graph has more than `cap` vertices.
CanonicalForm canonical_form(const Graph& g, std::size_t cap = kCanonicalCap);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace splitkit
