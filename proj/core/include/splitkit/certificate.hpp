#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "splitkit/graph.hpp"
#include "splitkit/split.hpp"

namespace splitkit {

/// Text form of a splitting sequence:
///
///     # splitkit certificate
///     graph <n> <m> <fingerprint-hex>
///     split <target> | <part1 csv> | <part2 csv> -> <child1> <child2>
///     ...
///
/// The graph line ties the certificate to its input; empty parts are written as nothing.
struct Certificate {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::uint64_t fingerprint = 0;
  std::vector<SplitSpec> steps;

  static Certificate of(const Graph& g, std::vector<SplitSpec> steps);
  bool matches(const Graph& g) const;
};

std::string format_split(const SplitSpec& s);
/// Parses one `split ...` line.
SplitSpec parse_split(const std::string& line, std::size_t line_no = 0);

void write_certificate(std::ostream& out, const Certificate& c);
std::string format_certificate(const Certificate& c);
Certificate read_certificate(std::istream& in);
Certificate parse_certificate(const std::string& text);
Certificate read_certificate_file(const std::string& path);
void write_certificate_file(const std::string& path, const Certificate& c);

}  // namespace splitkit
