#include "splitkit/graph.hpp"

#include <fstream>
#include <sstream>

#include "splitkit/error.hpp"

namespace splitkit {

namespace {
const VertexSet kNoNeighbors;
}

Graph Graph::with_vertices(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(static_cast<Vertex>(i));
  return g;
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g = with_vertices(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_vertex(Vertex v) { adjacency_.try_emplace(v); }

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  if (adjacency_[u].insert(v).second) {
    adjacency_[v].insert(u);
    ++edge_count_;
  }
}

void Graph::remove_edge(Vertex u, Vertex v) {
  auto it = adjacency_.find(u);
  if (it == adjacency_.end() || it->second.erase(v) == 0) return;
  adjacency_[v].erase(u);
  --edge_count_;
}

void Graph::remove_vertex(Vertex v) {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) return;
  for (Vertex w : it->second) adjacency_[w].erase(v);
  edge_count_ -= it->second.size();
  adjacency_.erase(it);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto it = adjacency_.find(u);
  return it != adjacency_.end() && it->second.count(v) != 0;
}

const VertexSet& Graph::neighbors(Vertex v) const {
  auto it = adjacency_.find(v);
  return it == adjacency_.end() ? kNoNeighbors : it->second;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, _] : adjacency_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [u, nbrs] : adjacency_)
    for (auto it = nbrs.upper_bound(u); it != nbrs.end(); ++it) out.emplace_back(u, *it);
  return out;
}

VertexSet Graph::isolated_vertices() const {
  VertexSet out;
  for (const auto& [v, nbrs] : adjacency_)
    if (nbrs.empty()) out.insert(out.end(), v);
  return out;
}

Vertex Graph::max_vertex() const {
  if (adjacency_.empty()) throw Error("max_vertex of the empty graph");
  return adjacency_.rbegin()->first;
}

Vertex Graph::next_free_id() const { return adjacency_.empty() ? 0 : max_vertex() + 1; }

Graph Graph::induced(const VertexSet& keep) const {
  Graph h;
  for (Vertex v : keep) {
    if (!has_vertex(v)) continue;
    h.add_vertex(v);
    for (Vertex w : neighbors(v))
      if (w > v && keep.count(w)) h.add_edge(v, w);
  }
  return h;
}

Graph Graph::complement() const {
  Graph h;
  auto vs = vertices();
  for (Vertex v : vs) h.add_vertex(v);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!adjacent(vs[i], vs[j])) h.add_edge(vs[i], vs[j]);
  return h;
}

bool Graph::is_compact() const { return adjacency_.empty() || max_vertex() + 1 == adjacency_.size(); }

CompactGraph compacted(const Graph& g) {
  CompactGraph out;
  out.original = g.vertices();
  std::map<Vertex, Vertex> index;
  for (std::size_t i = 0; i < out.original.size(); ++i) index[out.original[i]] = static_cast<Vertex>(i);
  out.graph = Graph::with_vertices(out.original.size());
  for (const Edge& e : g.edges()) out.graph.add_edge(index[e.first], index[e.second]);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out = a;
  Vertex shift = a.next_free_id();
  for (Vertex v : b.vertices()) out.add_vertex(v + shift);
  for (const Edge& e : b.edges()) out.add_edge(e.first + shift, e.second + shift);
  return out;
}

DiGraph DiGraph::ascending_orientation(const Graph& g) {
  DiGraph d;
  for (Vertex v : g.vertices()) d.add_vertex(v);
  for (const Edge& e : g.edges()) d.add_arc(e.first, e.second);
  return d;
}

void DiGraph::add_vertex(Vertex v) { vertices_.insert(v); }

void DiGraph::add_arc(Vertex tail, Vertex head) {
  if (tail == head) throw Error("loop arc at vertex " + std::to_string(tail));
  if (has_arc(tail, head) || has_arc(head, tail))
    throw Error("duplicate arc between " + std::to_string(tail) + " and " + std::to_string(head));
  vertices_.insert(tail);
  vertices_.insert(head);
  arcs_.emplace(tail, head);
}

VertexSet DiGraph::in_neighbors(Vertex v) const {
  VertexSet out;
  for (auto [t, h] : arcs_)
    if (h == v) out.insert(t);
  return out;
}

VertexSet DiGraph::out_neighbors(Vertex v) const {
  VertexSet out;
  for (auto [t, h] : arcs_)
    if (t == v) out.insert(h);
  return out;
}

Graph DiGraph::underlying() const {
  Graph g;
  for (Vertex v : vertices_) g.add_vertex(v);
  for (auto [t, h] : arcs_) g.add_edge(t, h);
  return g;
}

namespace {

// Next non-blank, non-comment line split into tokens; false at EOF.
bool next_record(std::istream& in, std::size_t& line_no, std::vector<long long>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    tokens.clear();
    std::string tok;
    while (ss >> tok) {
      try {
        std::size_t used = 0;
        long long value = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        tokens.push_back(value);
      } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line_no);
      }
    }
    if (!tokens.empty()) return true;
  }
  return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::size_t line_no = 0;
  std::vector<long long> tok;
  if (!next_record(in, line_no, tok)) throw ParseError("missing 'n m' header", line_no);
  if (tok.size() != 2 || tok[0] < 0 || tok[1] < 0) throw ParseError("header must be 'n m'", line_no);
  const long long n = tok[0];
  const long long m = tok[1];
  Graph g = Graph::with_vertices(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_record(in, line_no, tok))
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i), line_no);
    if (tok.size() != 2) throw ParseError("edge line must be 'u v'", line_no);
    long long u = tok[0], v = tok[1];
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range", line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) throw ParseError("duplicate edge", line_no);
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_record(in, line_no, tok)) throw ParseError("trailing data after edge list", line_no);
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_graph(in);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  if (!g.is_compact()) throw Error("write_graph needs vertex ids 0..n-1; compact the graph first");
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_graph(out, g);
}

std::uint64_t graph_fingerprint(const Graph& g) {
  std::ostringstream text;
  text << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (Vertex v : g.vertices()) text << 'v' << v << '\n';
  for (const Edge& e : g.edges()) text << e.first << ' ' << e.second << '\n';
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace splitkit
