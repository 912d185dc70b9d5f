#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <variant>
#include <vector>

#include "lkcds/graph.hpp"

namespace lkcds {

/// Weak s-reachability sets under one fixed order. Numbers derived from it are
/// upper bounds on wcol_s, never wcol_s itself.
struct WReachReport {
  int s = 0;
  std::vector<VertexSet> sets;
  std::size_t max_size = 0;
  double mean_size = 0.0;
};

/// A graph together with a linear order of its vertices.
class OrderedGraph {
 public:
  /// `order` lists the vertices from smallest to largest. Throws DomainError
  /// unless it is a permutation of 0..n-1.
  OrderedGraph(Graph graph, std::vector<Vertex> order);

  const Graph& graph() const { return graph_; }
  const std::vector<Vertex>& order() const { return order_; }
  std::size_t position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }
  bool less(Vertex a, Vertex b) const { return position(a) < position(b); }

  /// Memoised per radius; safe to call concurrently.
  const WReachReport& wreach(int s) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<WReachReport>> by_radius;
  };

  Graph graph_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

WReachReport wreach(const OrderedGraph& og, int s);
/// Uncached computation; one restricted BFS per candidate minimum.
WReachReport compute_wreach(const OrderedGraph& og, int s);

struct MinDegree {};
struct BfsOrder {};
struct RandomOrder {
  std::uint64_t seed;
};
using OrderStrategy = std::variant<MinDegree, BfsOrder, RandomOrder>;

OrderedGraph heuristic_order(const Graph& g, const OrderStrategy& strategy);

/// Returns the order-minimum z of `path` and checks that z is weakly r-reachable
/// from both the X-endpoint and y. Throws ContractError if `path` is not a path
/// of length 1..r from a vertex of X to y.
Vertex check_separation(const OrderedGraph& og, const VertexSet& x, Vertex y,
                        std::span<const Vertex> path, int r);

/// Order on lex_product(g, h): (x,y) ranked by the position of x, then by y.
OrderedGraph product_order(const OrderedGraph& og, const Graph& h);

/// All permutations of a small graph (n <= 8); the oracle for wcol_s.
std::size_t exact_wcol(const Graph& g, int s);

}  // namespace lkcds
