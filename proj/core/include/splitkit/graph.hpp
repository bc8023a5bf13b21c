#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace splitkit {

using Vertex = std::uint32_t;
using VertexSet = std::set<Vertex>;

/// Unordered vertex pair, stored with `first < second`.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  Edge() = default;
  Edge(Vertex u, Vertex v) : first(u < v ? u : v), second(u < v ? v : u) {}

  bool has(Vertex v) const { return first == v || second == v; }
  Vertex other(Vertex v) const { return v == first ? second : first; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph over stable vertex ids.
///
/// Ids are never renumbered by library operations; operations that need
/// fresh vertices allocate them above `max_vertex()`.
class Graph {
 public:
  Graph() = default;

  /// Graph on the vertices 0..n-1 without edges.
  static Graph with_vertices(std::size_t n);
  static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  void add_vertex(Vertex v);
  /// Adds both endpoints if missing. Throws on self-loops; duplicate edges are ignored.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void remove_vertex(Vertex v);

  bool has_vertex(Vertex v) const { return adjacency_.count(v) != 0; }
  bool adjacent(Vertex u, Vertex v) const;
  const VertexSet& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return adjacency_.empty(); }

  /// Ascending.
  std::vector<Vertex> vertices() const;
  /// Ascending by (first, second).
  std::vector<Edge> edges() const;
  VertexSet isolated_vertices() const;

  /// Largest id present; throws on the empty graph.
  Vertex max_vertex() const;
  /// Smallest id strictly above every present id (0 for the empty graph).
  Vertex next_free_id() const;

  Graph induced(const VertexSet& keep) const;
  Graph complement() const;

  /// True when the ids are exactly 0..n-1.
  bool is_compact() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::map<Vertex, VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Relabels to 0..n-1 preserving id order. `original[i]` is the old id of vertex i.
struct CompactGraph {
  Graph graph;
  std::vector<Vertex> original;
};
CompactGraph compacted(const Graph& g);

/// Disjoint union; the vertices of `b` are shifted above those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Orientation of a simple graph. At most one arc per unordered pair.
class DiGraph {
 public:
  DiGraph() = default;

  /// Orients every edge from the smaller to the larger id.
  static DiGraph ascending_orientation(const Graph& g);

  void add_vertex(Vertex v);
  /// Throws if the arc or its reverse is already present, or on loops.
  void add_arc(Vertex tail, Vertex head);

  bool has_vertex(Vertex v) const { return vertices_.count(v) != 0; }
  bool has_arc(Vertex tail, Vertex head) const { return arcs_.count({tail, head}) != 0; }
  const VertexSet& vertex_set() const { return vertices_; }
  const std::set<std::pair<Vertex, Vertex>>& arcs() const { return arcs_; }

  VertexSet in_neighbors(Vertex v) const;
  VertexSet out_neighbors(Vertex v) const;
  Graph underlying() const;

 private:
  VertexSet vertices_;
  std::set<std::pair<Vertex, Vertex>> arcs_;
};

/// Reads the `n m` + edge-list text format. Blank lines and `#` comments are ignored.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
Graph parse_graph(const std::string& text);

/// Writes the text format. Requires a compact graph (ids 0..n-1).
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

/// FNV-1a over the canonical text form; used by certificates to reference their input graph.
std::uint64_t graph_fingerprint(const Graph& g);

std::string to_string(const VertexSet& s);

}  // namespace splitkit
