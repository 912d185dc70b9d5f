#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lkcds/errors.hpp"
#include "lkcds/vertex_set.hpp"

namespace lkcds {

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge normalized(Edge e) { return e.u < e.v ? e : Edge{e.v, e.u}; }

/// Immutable undirected simple graph on vertices 0..n-1 with sorted adjacency.
///
/// `labels` optionally records an external identity per vertex; an empty label
/// vector means vertex i is labelled i.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Throws DomainError on self-loops, duplicate edges or out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  /// Like from_edges but silently drops duplicate edges (self-loops still rejected).
  static Graph from_edge_union(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool valid(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < adj_.size(); }

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  std::int64_t label(Vertex v) const {
    return labels_.empty() ? v : labels_[static_cast<std::size_t>(v)];
  }
  const std::vector<std::int64_t>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::int64_t> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::int64_t> labels_;
  std::size_t num_edges_ = 0;
};

/// Injective map from the ids of a subgraph to the ids of its host.
struct SubgraphWitness {
  std::vector<Vertex> vertex_map;

  Vertex to_host(Vertex v) const { return vertex_map[static_cast<std::size_t>(v)]; }
  VertexSet to_host(const VertexSet& s) const;
  /// Inverse lookup; returns -1 for host vertices outside the subgraph.
  std::vector<Vertex> from_host(std::size_t host_order) const;
  /// True iff the map is injective into the host and every edge of `sub` is a host edge.
  bool certifies(const Graph& sub, const Graph& host) const;
};

struct Subgraph {
  Graph graph;
  SubgraphWitness witness;
};

Subgraph induced_subgraph(const Graph& host, const VertexSet& vertices);
/// Subgraph on `vertices` keeping exactly `edges` (host ids). Throws ContractError
/// if an edge is absent from the host or leaves the vertex set.
Subgraph edge_subgraph(const Graph& host, const VertexSet& vertices, std::span<const Edge> edges);

// --- constructions --------------------------------------------------------

/// Replaces every edge by a path of length exactly r. Original ids stay 0..n-1;
/// the internal vertices of edge i (in edges() order) are appended in path order.
Graph r_subdivision(const Graph& g, int r);

/// Lexicographic product: (x,y) gets id x*|V(h)| + y.
Graph lex_product(const Graph& g, const Graph& h);

// --- traversal ------------------------------------------------------------

inline constexpr int kUnreached = -1;

struct DistanceMap {
  std::vector<int> dist;

  bool reached(Vertex v) const { return dist[static_cast<std::size_t>(v)] != kUnreached; }
  int operator[](Vertex v) const { return dist[static_cast<std::size_t>(v)]; }
  VertexSet reached_set() const;
};

/// Multi-source BFS up to depth_cap (negative cap = unbounded). Vertices in
/// `forbidden` receive a distance but are not expanded unless they are sources,
/// so every recorded distance is realised by a path whose internal vertices
/// avoid `forbidden`.
DistanceMap bfs_layers(const Graph& g, const VertexSet& sources, int depth_cap,
                       const VertexSet& forbidden = {});

/// BFS forest with the smallest-id parent on a previous layer.
struct BfsTree {
  DistanceMap dist;
  std::vector<Vertex> parent;  // -1 for sources and unreached vertices

  /// Vertices from v back to its source, v first.
  std::vector<Vertex> path_to_root(Vertex v) const;
};

BfsTree bfs_tree(const Graph& g, const VertexSet& sources, int depth_cap,
                 const VertexSet& forbidden = {});

bool is_connected(const Graph& g);
/// Component index per vertex, numbered by smallest member.
std::vector<int> components(const Graph& g);
/// Whether G[s] is connected (the empty set counts as connected).
bool induces_connected(const Graph& g, const VertexSet& s);
std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s);

// --- text formats ---------------------------------------------------------

enum class GraphFormat { edge_list, dimacs };

Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::edge_list);
std::string serialize_graph(const Graph& g);
Graph read_graph_file(const std::string& path, GraphFormat format = GraphFormat::edge_list);
GraphFormat parse_format_name(std::string_view name);

}  // namespace lkcds
