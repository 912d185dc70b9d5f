#include "lkcds/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace lkcds {

namespace {

std::vector<std::vector<Vertex>> build_adjacency(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n)
      throw DomainError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " out of range");
    if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<char> mask_of(std::size_t n, const VertexSet& s) {
  std::vector<char> mask(n, 0);
  for (Vertex v : s) mask[static_cast<std::size_t>(v)] = 1;
  return mask;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adj_ = build_adjacency(n, edges);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& list = g.adj_[v];
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end())
      throw DomainError("duplicate edge " + std::to_string(v) + "-" + std::to_string(*dup));
  }
  g.num_edges_ = edges.size();
  return g;
}

Graph Graph::from_edge_union(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adj_ = build_adjacency(n, edges);
  std::size_t degree_sum = 0;
  for (auto& list : g.adj_) {
    list.erase(std::unique(list.begin(), list.end()), list.end());
    degree_sum += list.size();
  }
  g.num_edges_ = degree_sum / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!valid(u) || !valid(v)) return false;
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (static_cast<Vertex>(u) < v) out.push_back({static_cast<Vertex>(u), v});
  return out;
}

Graph Graph::with_labels(std::vector<std::int64_t> labels) const {
  if (!labels.empty() && labels.size() != order())
    throw DomainError("label count does not match vertex count");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

VertexSet SubgraphWitness::to_host(const VertexSet& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(to_host(v));
  return VertexSet(std::move(out));
}

std::vector<Vertex> SubgraphWitness::from_host(std::size_t host_order) const {
  std::vector<Vertex> inverse(host_order, -1);
  for (std::size_t i = 0; i < vertex_map.size(); ++i)
    inverse[static_cast<std::size_t>(vertex_map[i])] = static_cast<Vertex>(i);
  return inverse;
}

bool SubgraphWitness::certifies(const Graph& sub, const Graph& host) const {
  if (vertex_map.size() != sub.order()) return false;
  std::vector<char> seen(host.order(), 0);
  for (Vertex h : vertex_map) {
    if (!host.valid(h) || seen[static_cast<std::size_t>(h)]) return false;
    seen[static_cast<std::size_t>(h)] = 1;
  }
  for (const Edge& e : sub.edges())
    if (!host.has_edge(to_host(e.u), to_host(e.v))) return false;
  return true;
}

Subgraph induced_subgraph(const Graph& host, const VertexSet& vertices) {
  std::vector<Vertex> local(host.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : vertices)
    for (Vertex v : host.neighbors(u))
      if (u < v && local[static_cast<std::size_t>(v)] >= 0)
        edges.push_back({local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]});
  return {Graph::from_edges(vertices.size(), edges), SubgraphWitness{vertices.members()}};
}

Subgraph edge_subgraph(const Graph& host, const VertexSet& vertices, std::span<const Edge> edges) {
  std::vector<Vertex> local(host.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
  std::vector<Edge> mapped;
  mapped.reserve(edges.size());
  for (const Edge& e : edges) {
    if (!host.has_edge(e.u, e.v))
      throw ContractError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in host");
    Vertex a = local[static_cast<std::size_t>(e.u)], b = local[static_cast<std::size_t>(e.v)];
    if (a < 0 || b < 0) throw ContractError("edge leaves the subgraph vertex set");
    mapped.push_back({a, b});
  }
  return {Graph::from_edge_union(vertices.size(), mapped), SubgraphWitness{vertices.members()}};
}

Graph r_subdivision(const Graph& g, int r) {
  if (r < 1) throw DomainError("subdivision length must be >= 1");
  if (r == 1) return Graph::from_edges(g.order(), g.edges());
  const auto original = g.edges();
  const std::size_t n = g.order() + static_cast<std::size_t>(r - 1) * original.size();
  std::vector<Edge> edges;
  edges.reserve(original.size() * static_cast<std::size_t>(r));
  auto next = static_cast<Vertex>(g.order());
  for (const Edge& e : original) {
    Vertex prev = e.u;
    for (int i = 1; i < r; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, e.v});
  }
  return Graph::from_edges(n, edges);
}

Graph lex_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw DomainError("lexicographic product of an empty graph");
  const auto nh = static_cast<Vertex>(h.order());
  auto id = [nh](Vertex x, Vertex y) { return x * nh + y; };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    for (Vertex y = 0; y < nh; ++y)
      for (Vertex y2 = 0; y2 < nh; ++y2) edges.push_back({id(e.u, y), id(e.v, y2)});
  const auto h_edges = h.edges();
  for (Vertex x = 0; x < static_cast<Vertex>(g.order()); ++x)
    for (const Edge& e : h_edges) edges.push_back({id(x, e.u), id(x, e.v)});
  return Graph::from_edges(g.order() * h.order(), edges);
}

VertexSet DistanceMap::reached_set() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < dist.size(); ++v)
    if (dist[v] != kUnreached) out.push_back(static_cast<Vertex>(v));
  return VertexSet::from_sorted(std::move(out));
}

DistanceMap bfs_layers(const Graph& g, const VertexSet& sources, int depth_cap, const VertexSet& forbidden) {
  DistanceMap out{std::vector<int>(g.order(), kUnreached)};
  const auto blocked = mask_of(g.order(), forbidden);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    out.dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    const int du = out[u];
    if (depth_cap >= 0 && du >= depth_cap) continue;
    if (du > 0 && blocked[static_cast<std::size_t>(u)]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (out.reached(v)) continue;
      out.dist[static_cast<std::size_t>(v)] = du + 1;
      queue.push_back(v);
    }
  }
  return out;
}

BfsTree bfs_tree(const Graph& g, const VertexSet& sources, int depth_cap, const VertexSet& forbidden) {
  BfsTree tree{bfs_layers(g, sources, depth_cap, forbidden), std::vector<Vertex>(g.order(), -1)};
  const auto blocked = mask_of(g.order(), forbidden);
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    const int dv = tree.dist[v];
    if (dv <= 0) continue;
    for (Vertex w : g.neighbors(v)) {
      // a parent must be expandable: a source, or an unblocked vertex
      if (tree.dist[w] == dv - 1 && (dv - 1 == 0 || !blocked[static_cast<std::size_t>(w)])) {
        tree.parent[static_cast<std::size_t>(v)] = w;
        break;
      }
    }
  }
  return tree;
}

std::vector<Vertex> BfsTree::path_to_root(Vertex v) const {
  std::vector<Vertex> path;
  for (Vertex cur = v; cur >= 0; cur = parent[static_cast<std::size_t>(cur)]) path.push_back(cur);
  return path;
}

std::vector<int> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u))
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = next;
          stack.push_back(v);
        }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto comp = components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s) {
  std::vector<int> comp(g.order(), -2);
  for (Vertex v : s) comp[static_cast<std::size_t>(v)] = -1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root : s) {
    if (comp[static_cast<std::size_t>(root)] != -1) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members{root};
    comp[static_cast<std::size_t>(root)] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u))
        if (comp[static_cast<std::size_t>(v)] == -1) {
          comp[static_cast<std::size_t>(v)] = id;
          members.push_back(v);
          stack.push_back(v);
        }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
  return s.size() <= 1 || induced_components(g, s).size() == 1;
}

}  // namespace lkcds
