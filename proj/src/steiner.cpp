#include "lkcds/steiner.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

namespace lkcds {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

std::vector<VertexSet> groups_of(const Graph& g, const SteinerQuery& q) {
  std::vector<VertexSet> groups;
  if (q.mode == SteinerQuery::Mode::terminals) {
    if (q.terminals.empty()) throw DomainError("empty terminal set");
    for (Vertex v : q.terminals) groups.push_back({v});
  } else {
    if (q.groups.empty()) throw DomainError("empty group family");
    groups = q.groups;
  }
  if (static_cast<int>(groups.size()) > q.group_limit)
    throw DomainError("query has " + std::to_string(groups.size()) + " groups, limit is " +
                      std::to_string(q.group_limit));
  std::vector<char> seen(g.order(), 0);
  for (const auto& grp : groups) {
    if (grp.empty()) throw DomainError("empty group");
    for (Vertex v : grp) {
      if (!g.valid(v)) throw DomainError("group vertex out of range");
      if (seen[static_cast<std::size_t>(v)]) throw DomainError("groups are not disjoint");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  return groups;
}

bool feasible(const Graph& g, const std::vector<VertexSet>& groups) {
  const auto comp = components(g);
  for (int c = 0; c < static_cast<int>(g.order()); ++c) {
    bool all = true;
    for (const auto& grp : groups) {
      bool any = std::any_of(grp.begin(), grp.end(), [&](Vertex v) { return comp[static_cast<std::size_t>(v)] == c; });
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

// How dp[S][v] was obtained: a seed, a merge of dp[part][v] and dp[S^part][v],
// or an edge from dp[S][from].
struct Back {
  enum Kind : char { none, seed, merge, edge } kind = none;
  std::uint32_t part = 0;
  Vertex from = -1;
};

class Solver {
 public:
  Solver(const Graph& g, const std::vector<VertexSet>& groups, int edge_cap)
      : g_(g), groups_(groups), n_(g.order()), full_((1u << groups.size()) - 1), edge_cap_(edge_cap),
        cost_((full_ + 1) * n_, kInf), back_((full_ + 1) * n_) {}

  // Returns the root of an optimal tree, or -1.
  Vertex run() {
    for (std::size_t i = 0; i < groups_.size(); ++i)
      for (Vertex v : groups_[i]) {
        at(1u << i, v) = 0;
        back(1u << i, v) = {Back::seed, 0, -1};
      }
    for (std::uint32_t s = 1; s <= full_; ++s) {
      if (s & (s - 1)) merge(s);
      relax(s);
    }
    Vertex best = -1;
    for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v)
      if (at(full_, v) < kInf && (best < 0 || at(full_, v) < at(full_, best))) best = v;
    return best;
  }

  SteinerTree extract(Vertex root) {
    SteinerTree tree;
    tree.touched.assign(groups_.size(), -1);
    std::vector<Edge> edges;
    std::vector<Vertex> verts;
    collect(full_, root, edges, verts, tree.touched);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    tree.vertices = VertexSet(std::move(verts));
    tree.edges = std::move(edges);
    if (tree.edges.size() + 1 != tree.vertices.size() || static_cast<int>(tree.edges.size()) != at(full_, root))
      throw ContractError("Steiner reconstruction is not a minimum tree");
    return tree;
  }

 private:
  int& at(std::uint32_t s, Vertex v) { return cost_[s * n_ + static_cast<std::size_t>(v)]; }
  Back& back(std::uint32_t s, Vertex v) { return back_[s * n_ + static_cast<std::size_t>(v)]; }

  void merge(std::uint32_t s) {
    const std::uint32_t low = s & -s;
    for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v) {
      int& best = at(s, v);
      // parts containing the lowest bit, so each split is tried once
      for (std::uint32_t part = (s - 1) & s; part; part = (part - 1) & s) {
        if (!(part & low)) continue;
        const int a = at(part, v), b = at(s ^ part, v);
        if (a >= kInf || b >= kInf) continue;
        if (a + b < best && a + b <= edge_cap_) {
          best = a + b;
          back(s, v) = {Back::merge, part, -1};
        }
      }
    }
  }

  void relax(std::uint32_t s) {
    using Item = std::pair<int, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v)
      if (at(s, v) < kInf) heap.push({at(s, v), v});
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d != at(s, u) || d + 1 > edge_cap_) continue;
      for (Vertex w : g_.neighbors(u))
        if (d + 1 < at(s, w)) {
          at(s, w) = d + 1;
          back(s, w) = {Back::edge, 0, u};
          heap.push({d + 1, w});
        }
    }
  }

  void collect(std::uint32_t s, Vertex v, std::vector<Edge>& edges, std::vector<Vertex>& verts,
               std::vector<Vertex>& touched) {
    verts.push_back(v);
    const Back b = back(s, v);
    switch (b.kind) {
      case Back::seed:
        touched[static_cast<std::size_t>(std::countr_zero(s))] = v;
        break;
      case Back::merge:
        collect(b.part, v, edges, verts, touched);
        collect(s ^ b.part, v, edges, verts, touched);
        break;
      case Back::edge:
        edges.push_back(normalized({b.from, v}));
        collect(s, b.from, edges, verts, touched);
        break;
      case Back::none:
        throw ContractError("missing Steiner back-pointer");
    }
  }

  const Graph& g_;
  const std::vector<VertexSet>& groups_;
  std::size_t n_;
  std::uint32_t full_;
  int edge_cap_;
  std::vector<int> cost_;
  std::vector<Back> back_;
};

}  // namespace

SteinerQuery SteinerQuery::of_terminals(VertexSet terminals, std::optional<int> cap) {
  SteinerQuery q;
  q.mode = Mode::terminals;
  q.terminals = std::move(terminals);
  q.size_cap = cap;
  return q;
}

SteinerQuery SteinerQuery::of_groups(std::vector<VertexSet> groups, std::optional<int> cap) {
  SteinerQuery q;
  q.mode = Mode::groups;
  q.groups = std::move(groups);
  q.size_cap = cap;
  return q;
}

SteinerOutcome steiner_exact(const Graph& g, const SteinerQuery& q) {
  const auto groups = groups_of(g, q);
  if (!feasible(g, groups)) return {SteinerOutcome::Status::infeasible, std::nullopt};
  const int edge_cap = q.size_cap ? *q.size_cap - 1 : kInf;
  if (edge_cap < 0) return {SteinerOutcome::Status::exceeds_cap, std::nullopt};
  Solver solver(g, groups, edge_cap);
  const Vertex root = solver.run();
  if (root < 0) return {SteinerOutcome::Status::exceeds_cap, std::nullopt};
  return {SteinerOutcome::Status::found, solver.extract(root)};
}

std::optional<int> st_value(const Graph& g, const SteinerQuery& q) {
  SteinerQuery uncapped = q;
  uncapped.size_cap.reset();
  auto out = steiner_exact(g, uncapped);
  if (!out.found()) return std::nullopt;
  return out.tree->size();
}

bool valid_steiner_tree(const Graph& g, const SteinerQuery& q, const SteinerTree& tree) {
  if (tree.vertices.empty() || tree.edges.size() + 1 != tree.vertices.size()) return false;
  for (Vertex v : tree.vertices)
    if (!g.valid(v)) return false;
  for (const Edge& e : tree.edges)
    if (!g.has_edge(e.u, e.v) || !tree.vertices.contains(e.u) || !tree.vertices.contains(e.v)) return false;
  auto sub = edge_subgraph(g, tree.vertices, tree.edges);
  if (!is_connected(sub.graph)) return false;
  const auto groups = groups_of(g, q);
  return std::all_of(groups.begin(), groups.end(),
                     [&](const VertexSet& grp) { return !grp.intersect(tree.vertices).empty(); });
}

}  // namespace lkcds
