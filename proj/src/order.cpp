#include "lkcds/order.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

namespace lkcds {

OrderedGraph::OrderedGraph(Graph graph, std::vector<Vertex> order)
    : graph_(std::move(graph)), order_(std::move(order)), position_(graph_.order(), graph_.order()) {
  if (order_.size() != graph_.order()) throw DomainError("order length differs from vertex count");
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const Vertex v = order_[i];
    if (!graph_.valid(v) || position_[static_cast<std::size_t>(v)] != graph_.order())
      throw DomainError("order is not a permutation");
    position_[static_cast<std::size_t>(v)] = i;
  }
}

const WReachReport& OrderedGraph::wreach(int s) const {
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->by_radius[s];
  if (!slot) slot = std::make_unique<WReachReport>(compute_wreach(*this, s));
  return *slot;
}

WReachReport wreach(const OrderedGraph& og, int s) { return og.wreach(s); }

WReachReport compute_wreach(const OrderedGraph& og, int s) {
  if (s < 0) throw DomainError("reachability radius must be >= 0");
  const Graph& g = og.graph();
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> sets(n);
  std::vector<int> dist(n, kUnreached);
  std::vector<Vertex> touched;
  std::deque<Vertex> queue;
  // u is weakly s-reachable from v iff v is within distance s of u in the
  // subgraph induced by the vertices that are not smaller than u.
  for (Vertex u : og.order()) {
    const std::size_t pu = og.position(u);
    dist[static_cast<std::size_t>(u)] = 0;
    touched.assign(1, u);
    queue.assign(1, u);
    while (!queue.empty()) {
      Vertex w = queue.front();
      queue.pop_front();
      sets[static_cast<std::size_t>(w)].push_back(u);
      if (dist[static_cast<std::size_t>(w)] == s) continue;
      for (Vertex v : g.neighbors(w)) {
        if (dist[static_cast<std::size_t>(v)] != kUnreached || og.position(v) < pu) continue;
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(w)] + 1;
        touched.push_back(v);
        queue.push_back(v);
      }
    }
    for (Vertex v : touched) dist[static_cast<std::size_t>(v)] = kUnreached;
  }
  WReachReport report{s, {}, 0, 0.0};
  report.sets.reserve(n);
  std::size_t total = 0;
  for (auto& members : sets) {
    report.max_size = std::max(report.max_size, members.size());
    total += members.size();
    report.sets.emplace_back(std::move(members));
  }
  report.mean_size = n ? static_cast<double>(total) / static_cast<double>(n) : 0.0;
  return report;
}

namespace {

std::vector<Vertex> min_degree_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> degree(n);
  std::vector<char> removed(n, 0);
  for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(static_cast<Vertex>(v));
  std::vector<Vertex> removal;
  removal.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = -1;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || degree[v] < degree[static_cast<std::size_t>(best)])) best = static_cast<Vertex>(v);
    removed[static_cast<std::size_t>(best)] = 1;
    removal.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (!removed[static_cast<std::size_t>(w)]) --degree[static_cast<std::size_t>(w)];
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

std::vector<Vertex> bfs_order(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> order;
  for (Vertex root = 0; root < static_cast<Vertex>(g.order()); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = 1;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      Vertex u = order[head++];
      for (Vertex v : g.neighbors(u))
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          order.push_back(v);
        }
    }
  }
  return order;
}

}  // namespace

OrderedGraph heuristic_order(const Graph& g, const OrderStrategy& strategy) {
  struct Visitor {
    const Graph& g;
    std::vector<Vertex> operator()(MinDegree) const { return min_degree_order(g); }
    std::vector<Vertex> operator()(BfsOrder) const { return bfs_order(g); }
    std::vector<Vertex> operator()(RandomOrder r) const {
      std::vector<Vertex> order(g.order());
      std::iota(order.begin(), order.end(), 0);
      std::mt19937_64 rng(r.seed);
      std::shuffle(order.begin(), order.end(), rng);
      return order;
    }
  };
  return OrderedGraph(g, std::visit(Visitor{g}, strategy));
}

Vertex check_separation(const OrderedGraph& og, const VertexSet& x, Vertex y, std::span<const Vertex> path, int r) {
  const Graph& g = og.graph();
  if (path.size() < 2) throw ContractError("separation path must have length >= 1");
  if (static_cast<int>(path.size()) - 1 > r) throw ContractError("separation path longer than r");
  if (!x.contains(path.front())) throw ContractError("path does not start in X");
  if (path.back() != y) throw ContractError("path does not end at y");
  std::vector<Vertex> sorted(path.begin(), path.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ContractError("separation path repeats a vertex");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1])) throw ContractError("separation path uses a non-edge");

  const Vertex z = *std::min_element(path.begin(), path.end(), [&](Vertex a, Vertex b) { return og.less(a, b); });
  const auto& reach = og.wreach(r);
  if (!reach.sets[static_cast<std::size_t>(path.front())].contains(z) || !reach.sets[static_cast<std::size_t>(y)].contains(z))
    throw ContractError("minimum of the path is not weakly reachable from both ends");
  return z;
}

OrderedGraph product_order(const OrderedGraph& og, const Graph& h) {
  const auto nh = static_cast<Vertex>(h.order());
  std::vector<Vertex> order;
  order.reserve(og.graph().order() * h.order());
  for (Vertex x : og.order())
    for (Vertex y = 0; y < nh; ++y) order.push_back(x * nh + y);
  return OrderedGraph(lex_product(og.graph(), h), std::move(order));
}

std::size_t exact_wcol(const Graph& g, int s) {
  if (g.order() > 8) throw DomainError("exact wcol is limited to 8 vertices");
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::size_t best = g.order();
  do {
    best = std::min(best, compute_wreach(OrderedGraph(g, order), s).max_size);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace lkcds
