#include "lkcds/domset.hpp"

#include <algorithm>
#include <tuple>

namespace lkcds {

bool dominates(const Graph& g, const VertexSet& d, int r, const VertexSet& targets) {
  if (targets.empty()) return true;
  if (d.empty()) return false;
  const auto dist = bfs_layers(g, d, r);
  return std::all_of(targets.begin(), targets.end(), [&](Vertex v) { return dist.reached(v); });
}

bool dominates(const Graph& g, const VertexSet& d, int r) {
  return dominates(g, d, r, VertexSet::range(g.order()));
}

bool is_connected_dominating(const Graph& g, const VertexSet& d, int r) {
  return !d.empty() && induces_connected(g, d) && dominates(g, d, r);
}

ConnectResult connect_components(const Graph& g, const VertexSet& d, int r) {
  if (d.empty()) throw DomainError("connect needs a nonempty set");
  ConnectResult out;
  VertexSet current = d;
  out.components = induced_components(g, current).size();
  for (;;) {
    const auto comps = induced_components(g, current);
    if (comps.size() <= 1) break;
    std::vector<int> comp_of(g.order(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (Vertex v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

    std::tuple<int, Vertex, Vertex> best{-1, -1, -1};
    BfsTree best_tree;
    for (Vertex a : current) {
      auto tree = bfs_tree(g, {a}, -1);
      for (Vertex b : current) {
        if (b <= a || comp_of[static_cast<std::size_t>(b)] == comp_of[static_cast<std::size_t>(a)]) continue;
        if (!tree.dist.reached(b)) continue;
        std::tuple<int, Vertex, Vertex> cand{tree.dist[b], a, b};
        if (std::get<0>(best) < 0 || cand < best) {
          best = cand;
          best_tree = tree;
        }
      }
    }
    const auto [dist, a, b] = best;
    if (dist < 0) throw ContractError("components of D lie in different components of g");
    if (dist - 1 > 2 * r)
      throw ContractError("merge needs " + std::to_string(dist - 1) + " internal vertices, more than 2r");
    out.merge_costs.push_back(dist - 1);
    for (Vertex v : best_tree.path_to_root(b))
      if (!current.contains(v)) {
        current.insert(v);
        out.added.insert(v);
      }
  }
  return out;
}

VertexSet connect(const Graph& g, const VertexSet& d, int r) { return connect_components(g, d, r).added; }

std::size_t CoveringFamily::total_size() const {
  std::size_t total = 0;
  for (const auto& tree : trees) total += tree.vertices.size();
  return total;
}

namespace {

struct Splitter {
  const Graph& g;
  std::vector<std::vector<Vertex>> children;
  std::vector<Vertex> parent;
  std::int64_t h;
  std::int64_t cap;
  std::vector<SteinerTree> pieces;

  SteinerTree piece(std::vector<Vertex> verts) {
    SteinerTree t;
    t.vertices = VertexSet(std::move(verts));
    for (Vertex v : t.vertices)
      if (parent[static_cast<std::size_t>(v)] >= 0 && t.vertices.contains(parent[static_cast<std::size_t>(v)]))
        t.edges.push_back(normalized({v, parent[static_cast<std::size_t>(v)]}));
    std::sort(t.edges.begin(), t.edges.end());
    return t;
  }

  // Returns the residual subtree of v: a connected vertex set containing v,
  // smaller than h, not yet assigned to a piece.
  std::vector<Vertex> split(Vertex v) {
    std::vector<Vertex> batch;
    for (Vertex c : children[static_cast<std::size_t>(v)]) {
      auto rest = split(c);
      if (rest.empty()) continue;
      if (static_cast<std::int64_t>(1 + batch.size() + rest.size()) > cap) {
        emit(v, batch);
        batch.clear();
      }
      batch.insert(batch.end(), rest.begin(), rest.end());
      if (static_cast<std::int64_t>(batch.size()) >= h) {
        emit(v, batch);
        batch.clear();
      }
    }
    batch.push_back(v);
    if (static_cast<std::int64_t>(batch.size()) >= h || parent[static_cast<std::size_t>(v)] < 0) {
      pieces.push_back(piece(batch));
      return {};
    }
    return batch;
  }

  void emit(Vertex v, const std::vector<Vertex>& batch) {
    if (batch.empty()) return;
    auto verts = batch;
    verts.push_back(v);
    pieces.push_back(piece(std::move(verts)));
  }
};

}  // namespace

CoveringFamily covering_family(const Graph& g, const Rational& t) {
  if (t < Rational(1, 2)) throw DomainError("covering family needs t >= 1/2");
  if (g.order() == 0 || !is_connected(g)) throw DomainError("covering family needs a connected graph");
  const auto tree = bfs_tree(g, {0}, -1);
  Splitter s{g, std::vector<std::vector<Vertex>>(g.order()), tree.parent, ceil_of(t), floor_of(2 * t), {}};
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
    if (tree.parent[static_cast<std::size_t>(v)] >= 0) s.children[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(v)])].push_back(v);
  s.split(0);

  CoveringFamily family{std::move(s.pieces), t};
  const auto report = check_covering_family(g, family);
  if (!report.covers || !report.pieces_are_subtrees || !report.piece_sizes_ok)
    throw ContractError("covering family violates its structural invariants");
  if (2 * ceil_of(t) - 1 <= floor_of(2 * t) && !(report.count_ok && report.total_ok))
    throw ContractError("covering family violates its counting bounds");
  return family;
}

CoveringReport check_covering_family(const Graph& g, const CoveringFamily& family) {
  CoveringReport rep;
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<char> covered(g.order(), 0);
  for (const auto& tree : family.trees) {
    for (Vertex v : tree.vertices)
      if (g.valid(v)) covered[static_cast<std::size_t>(v)] = 1;
    if (static_cast<std::int64_t>(tree.vertices.size()) > floor_of(2 * family.t)) rep.piece_sizes_ok = false;
    bool subtree = !tree.vertices.empty() && tree.edges.size() + 1 == tree.vertices.size();
    for (const Edge& e : tree.edges)
      subtree = subtree && g.has_edge(e.u, e.v) && tree.vertices.contains(e.u) && tree.vertices.contains(e.v);
    if (subtree) subtree = is_connected(edge_subgraph(g, tree.vertices, tree.edges).graph);
    if (!subtree) rep.pieces_are_subtrees = false;
  }
  rep.covers = std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
  const auto count = static_cast<std::int64_t>(family.trees.size());
  const auto total = static_cast<std::int64_t>(family.total_size());
  rep.count_ok = Rational(count) <= Rational(n) / family.t + 1;
  rep.total_ok = Rational(total) <= (1 + 1 / family.t) * n + 1;
  return rep;
}

VertexSet greedy_rdom(const Graph& g, int r, const VertexSet& targets) {
  if (r < 1) throw DomainError("greedy domination needs r >= 1");
  std::vector<VertexSet> ball(g.order());
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) ball[static_cast<std::size_t>(v)] = bfs_layers(g, {v}, r).reached_set();
  VertexSet uncovered = targets;
  VertexSet chosen;
  while (!uncovered.empty()) {
    Vertex best = -1;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
      const auto gain = ball[static_cast<std::size_t>(v)].intersect(uncovered).size();
      if (gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    chosen.insert(best);
    uncovered = uncovered.minus(ball[static_cast<std::size_t>(best)]);
  }
  return chosen;
}

}  // namespace lkcds
