#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "brute.hpp"
#include "lkcds/families.hpp"
#include "lkcds/order.hpp"

using namespace lkcds;

namespace {

std::vector<Vertex> identity(std::size_t n) {
  std::vector<Vertex> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

}  // namespace

TEST(WReach, Examples) {
  OrderedGraph p4(families::path(4), identity(4));
  auto rep = wreach(p4, 2);
  EXPECT_EQ(rep.sets[3], (VertexSet{1, 2, 3}));
  EXPECT_EQ(rep.max_size, 3u);

  OrderedGraph k4(families::complete(4), {2, 0, 3, 1});
  auto kr = wreach(k4, 1);
  for (const auto& s : kr.sets) EXPECT_TRUE(s.contains(2));
  EXPECT_EQ(kr.max_size, 4u);
  EXPECT_EQ(kr.sets[1].size(), 4u);

  OrderedGraph star(families::star(5), identity(6));
  auto sr = wreach(star, 2);
  for (Vertex leaf = 1; leaf <= 5; ++leaf) EXPECT_EQ(sr.sets[static_cast<std::size_t>(leaf)], (VertexSet{0, leaf}));
  EXPECT_EQ(sr.max_size, 2u);
}

TEST(WReach, ZeroRadiusIsSelf) {
  OrderedGraph g(families::grid(3, 3), identity(9));
  auto rep = wreach(g, 0);
  for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(rep.sets[static_cast<std::size_t>(v)], VertexSet{v});
}

TEST(WReach, AgreesWithPathEnumeration) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = families::random_connected(4 + seed % 8, 0.3, seed);
    auto order = identity(g.order());
    std::shuffle(order.begin(), order.end(), rng);
    OrderedGraph og(g, order);
    for (int s = 0; s <= 3; ++s) EXPECT_EQ(wreach(og, s).sets, brute::wreach(g, order, s)) << seed << " " << s;
  }
}

TEST(WReach, CachedValueMatches) {
  OrderedGraph og(families::grid(3, 4), identity(12));
  const auto& a = og.wreach(2);
  const auto& b = og.wreach(2);
  EXPECT_EQ(&a, &b);
  EXPECT_EQ(a.sets, compute_wreach(og, 2).sets);
}

TEST(WReach, SubgraphMonotone) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = families::random_connected(10, 0.3, seed);
    auto edges = g.edges();
    edges.resize(edges.size() / 2);
    auto h = Graph::from_edges(10, edges);
    auto order = identity(10);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    for (int s = 1; s <= 3; ++s) {
      auto wg = compute_wreach(OrderedGraph(g, order), s), wh = compute_wreach(OrderedGraph(h, order), s);
      for (std::size_t v = 0; v < 10; ++v) EXPECT_TRUE(wg.sets[v].includes(wh.sets[v]));
    }
  }
}

TEST(HeuristicOrder, Examples) {
  EXPECT_LE(wreach(heuristic_order(families::path(4), MinDegree{}), 1).max_size, 2u);
  for (OrderStrategy s : {OrderStrategy{MinDegree{}}, OrderStrategy{BfsOrder{}}, OrderStrategy{RandomOrder{3}}})
    EXPECT_EQ(wreach(heuristic_order(families::complete(4), s), 1).max_size, 4u);
  auto g = families::grid(4, 4);
  EXPECT_EQ(heuristic_order(g, RandomOrder{7}).order(), heuristic_order(g, RandomOrder{7}).order());
}

TEST(HeuristicOrder, ValidPermutations) {
  auto g = families::random_tree_with_chords(15, 6, 2);
  for (OrderStrategy s : {OrderStrategy{MinDegree{}}, OrderStrategy{BfsOrder{}}, OrderStrategy{RandomOrder{1}}}) {
    auto order = heuristic_order(g, s).order();
    std::sort(order.begin(), order.end());
    EXPECT_EQ(order, identity(15));
  }
  EXPECT_THROW(OrderedGraph(families::path(3), {0, 0, 1}), DomainError);
}

TEST(CheckSeparation, Examples) {
  OrderedGraph fwd(families::path(5), identity(5));
  std::vector<Vertex> path{0, 1, 2};
  EXPECT_EQ(check_separation(fwd, {0}, 2, path, 2), 0);
  OrderedGraph back(families::path(5), {2, 1, 0, 3, 4});
  EXPECT_EQ(check_separation(back, {0}, 2, path, 2), 2);
  std::vector<Vertex> single{0};
  EXPECT_THROW(check_separation(fwd, {0}, 0, single, 2), ContractError);
  std::vector<Vertex> gap{0, 2};
  EXPECT_THROW(check_separation(fwd, {0}, 2, gap, 2), ContractError);
  EXPECT_THROW(check_separation(fwd, {0}, 2, path, 1), ContractError);
  EXPECT_THROW(check_separation(fwd, {1}, 2, path, 2), ContractError);
}

TEST(ProductOrder, Examples) {
  OrderedGraph p2(families::path(2), {0, 1});
  auto po = product_order(p2, families::complete(2));
  EXPECT_EQ(po.graph(), families::complete(4));
  EXPECT_EQ(po.order(), (std::vector<Vertex>{0, 1, 2, 3}));

  OrderedGraph c5(families::cycle(5), {3, 1, 4, 0, 2});
  auto same = product_order(c5, Graph(1));
  EXPECT_EQ(same.order(), c5.order());
  EXPECT_EQ(same.graph(), c5.graph());

  OrderedGraph p4(families::path(4), identity(4));
  auto big = product_order(p4, families::complete(3));
  EXPECT_LE(wreach(big, 2).max_size, 3 * wreach(p4, 2).max_size);
}

TEST(ProductOrder, ConstructiveBound) {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto g = families::random_connected(3 + seed % 6, 0.3, seed);
    auto order = identity(g.order());
    std::shuffle(order.begin(), order.end(), rng);
    OrderedGraph og(g, order);
    for (auto h : {Graph(1), families::path(2), families::complete(3), families::path(3)})
      for (int s = 1; s <= 3; ++s)
        EXPECT_LE(wreach(product_order(og, h), s).max_size, h.order() * wreach(og, s).max_size);
  }
}

TEST(ExactWcol, SmallGraphs) {
  EXPECT_EQ(exact_wcol(families::path(6), 1), 2u);
  EXPECT_EQ(exact_wcol(families::complete(5), 3), 5u);
  EXPECT_EQ(exact_wcol(families::star(6), 4), 2u);
  auto g = families::cycle(7);
  EXPECT_LE(exact_wcol(g, 2), wreach(heuristic_order(g, MinDegree{}), 2).max_size);
}
