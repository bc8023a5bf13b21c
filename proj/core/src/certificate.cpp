#include "splitkit/certificate.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "splitkit/error.hpp"

namespace splitkit {

Certificate Certificate::of(const Graph& g, std::vector<SplitSpec> steps) {
  return Certificate{g.vertex_count(), g.edge_count(), graph_fingerprint(g), std::move(steps)};
}

bool Certificate::matches(const Graph& g) const {
  return vertex_count == g.vertex_count() && edge_count == g.edge_count() && fingerprint == graph_fingerprint(g);
}

namespace {

std::string csv(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Vertex parse_id(const std::string& tok, std::size_t line_no) {
  std::string t = trim(tok);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad vertex id '" + t + "'", line_no);
  unsigned long long v = std::stoull(t);
  if (v > 0xffffffffull) throw ParseError("vertex id out of range", line_no);
  return static_cast<Vertex>(v);
}

VertexSet parse_csv(const std::string& text, std::size_t line_no) {
  VertexSet out;
  std::string t = trim(text);
  if (t.empty()) return out;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!out.insert(parse_id(tok, line_no)).second) throw ParseError("repeated id in part", line_no);
  }
  return out;
}

}  // namespace

std::string format_split(const SplitSpec& s) {
  std::ostringstream out;
  out << "split " << s.target << " | " << csv(s.part1) << " | " << csv(s.part2) << " -> " << s.child1 << ' '
      << s.child2;
  return out.str();
}

SplitSpec parse_split(const std::string& line, std::size_t line_no) {
  std::string t = trim(line);
  if (t.rfind("split ", 0) != 0) throw ParseError("expected 'split'", line_no);
  auto arrow = t.find("->");
  if (arrow == std::string::npos) throw ParseError("missing '->'", line_no);
  std::string lhs = t.substr(6, arrow - 6);
  std::string rhs = t.substr(arrow + 2);
  auto bar1 = lhs.find('|');
  auto bar2 = bar1 == std::string::npos ? std::string::npos : lhs.find('|', bar1 + 1);
  if (bar2 == std::string::npos || lhs.find('|', bar2 + 1) != std::string::npos)
    throw ParseError("expected 'target | part1 | part2'", line_no);
  SplitSpec s;
  s.target = parse_id(lhs.substr(0, bar1), line_no);
  s.part1 = parse_csv(lhs.substr(bar1 + 1, bar2 - bar1 - 1), line_no);
  s.part2 = parse_csv(lhs.substr(bar2 + 1), line_no);
  std::istringstream children(rhs);
  std::string c1, c2, extra;
  if (!(children >> c1 >> c2) || (children >> extra)) throw ParseError("expected two child ids after '->'", line_no);
  s.child1 = parse_id(c1, line_no);
  s.child2 = parse_id(c2, line_no);
  return s;
}

void write_certificate(std::ostream& out, const Certificate& c) {
  out << "# splitkit certificate\n";
  out << "graph " << c.vertex_count << ' ' << c.edge_count << ' ' << std::hex << std::setw(16) << std::setfill('0')
      << c.fingerprint << std::dec << std::setfill(' ') << '\n';
  for (const SplitSpec& s : c.steps) out << format_split(s) << '\n';
}

std::string format_certificate(const Certificate& c) {
  std::ostringstream out;
  write_certificate(out, c);
  return out.str();
}

Certificate read_certificate(std::istream& in) {
  Certificate c;
  bool have_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    if (!have_header) {
      std::istringstream ss(t);
      std::string word, hex, extra;
      if (!(ss >> word >> c.vertex_count >> c.edge_count >> hex) || word != "graph" || (ss >> extra))
        throw ParseError("expected 'graph <n> <m> <fingerprint>'", line_no);
      try {
        std::size_t used = 0;
        c.fingerprint = std::stoull(hex, &used, 16);
        if (used != hex.size()) throw std::invalid_argument(hex);
      } catch (const std::exception&) {
        throw ParseError("bad fingerprint '" + hex + "'", line_no);
      }
      have_header = true;
      continue;
    }
    c.steps.push_back(parse_split(t, line_no));
  }
  if (!have_header) throw ParseError("missing 'graph' header", line_no);
  return c;
}

Certificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  return read_certificate(in);
}

Certificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_certificate(in);
}

void write_certificate_file(const std::string& path, const Certificate& c) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_certificate(out, c);
}

}  // namespace splitkit
