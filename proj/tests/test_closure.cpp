#include <gtest/gtest.h>

#include "lkcds/closure.hpp"
#include "lkcds/families.hpp"

using namespace lkcds;

TEST(BuildClosure, PathExample) {
  auto p5 = families::path(5);
  auto res = build_closure(p5, {0, 4}, 2, Rational(1));
  EXPECT_EQ(res.classes.num_classes(), 3u);
  std::vector<ClassSubset> kept;
  for (const auto& [subset, tree] : res.kept_trees) kept.push_back(subset);
  EXPECT_EQ(kept, (std::vector<ClassSubset>{{0}, {0, 1}, {1}, {1, 2}, {2}}));
  EXPECT_EQ(res.gprime, p5);
  EXPECT_EQ(res.witness.vertex_map, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(verify_closure(p5, {0, 4}, res).ok());
}

TEST(BuildClosure, CoreIsEverything) {
  auto g = families::grid(2, 3);
  auto res = build_closure(g, VertexSet::range(6), 1, Rational(1));
  EXPECT_EQ(res.classes.num_classes(), 0u);
  EXPECT_EQ(res.gprime, g);
}

TEST(BuildClosure, SingleClass) {
  auto star = families::star(5);
  auto res = build_closure(star, {0}, 1, Rational(1));
  ASSERT_EQ(res.classes.num_classes(), 1u);
  EXPECT_EQ(res.witness.vertex_map, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(res.gprime.num_edges(), 1u);
  EXPECT_EQ(res.x, VertexSet{0});
}

TEST(BuildClosure, Errors) {
  EXPECT_THROW(build_closure(families::path(3), {}, 1, Rational(1)), DomainError);
  EXPECT_THROW(build_closure(families::path(3), {0}, 1, Rational(1, 4)), DomainError);
}

TEST(VerifyClosure, DroppedPathBreaksSurjectivity) {
  auto p4 = families::path(4);
  auto res = build_closure(p4, {0}, 1, Rational(1));
  ASSERT_TRUE(verify_closure(p4, {0}, res).ok());
  std::vector<Edge> edges;
  for (auto e : res.gprime.edges()) {
    Edge host{res.witness.to_host(e.u), res.witness.to_host(e.v)};
    if (host != Edge{0, 1}) edges.push_back(host);
  }
  auto tampered = edge_subgraph(p4, res.witness.to_host(VertexSet::range(res.gprime.order())), edges);
  auto rep = verify_closure(p4, {0}, 1, Rational(1), tampered.graph, tampered.witness);
  EXPECT_TRUE(rep.x_included);
  EXPECT_FALSE(rep.profiles_surjective);
}

TEST(VerifyClosure, DetourBreaksSteinerValues) {
  // X = {0,3}; 1 and 2 are adjacent but the detour 1-4-2 keeps every profile
  auto g = parse_graph("p 5 5\n0 1\n2 3\n1 2\n1 4\n4 2\n");
  auto res = build_closure(g, {0, 3}, 1, Rational(1));
  EXPECT_TRUE(verify_closure(g, {0, 3}, res).ok());
  std::vector<Edge> detour{{0, 1}, {2, 3}, {1, 4}, {2, 4}};
  auto tampered = edge_subgraph(g, VertexSet::range(5), detour);
  auto rep = verify_closure(g, {0, 3}, 1, Rational(1), tampered.graph, tampered.witness);
  EXPECT_TRUE(rep.profiles_surjective);
  EXPECT_FALSE(rep.steiner_preserved);
}

TEST(VerifyClosure, RandomInstances) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto g = families::random_tree_with_chords(10 + seed % 8, seed % 3, seed);
    VertexSet x{0, static_cast<Vertex>(g.order() / 2)};
    for (int r = 1; r <= 2; ++r)
      for (const auto& t : {Rational(1), Rational(3, 2), Rational(2)}) {
        auto res = build_closure(g, x, r, t);
        auto rep = verify_closure(g, x, res);
        EXPECT_TRUE(rep.ok()) << seed << " r=" << r << (rep.failures.empty() ? "" : " " + rep.failures.front());
        for (const auto& [subset, tree] : res.kept_trees) EXPECT_LE(tree.size(), res.cap);
      }
  }
}

namespace {

// Two leaves-to-core routes share the profile (3,2,2,inf) over x1..x4.
Graph figure_graph() {
  enum : Vertex { x1, x2, x3, x4, a1, a2, u1, a3, b1, b2, u2, b3, u3 };
  std::vector<Edge> e{{u1, a2}, {a2, a1}, {a1, x1}, {a2, x2}, {a3, x3}, {u1, a3}, {u2, b2},
                      {b2, b1}, {b1, x1}, {b2, x2}, {b2, x3}, {b3, x3}, {u3, b2}, {u3, b3}};
  return Graph::from_edges(13, e);
}

}  // namespace

TEST(AnalysisGraph, FigureScenario) {
  auto g = figure_graph();
  const VertexSet x{0, 1, 2, 3};
  ClosureResult res;
  res.gprime = g;
  res.witness.vertex_map = VertexSet::range(13).members();
  res.x = x;
  res.r = 3;
  res.classes = classify(g, x, 3);
  res.terminals = {6, 10, 12};
  const int kappa = res.classes.class_of[6];
  ASSERT_EQ(res.classes.class_of[10], kappa);
  ASSERT_EQ(res.classes.class_of[12], kappa);
  EXPECT_EQ(res.classes.profiles[static_cast<std::size_t>(kappa)].entries,
            (std::vector<std::pair<Vertex, int>>{{0, 3}, {1, 2}, {2, 2}}));

  auto an = build_analysis_graph(g, res);
  EXPECT_EQ(an.anchor.at(kappa), 1);
  EXPECT_EQ(an.trees.at(kappa), (std::vector<Edge>{{1, 5}, {1, 9}, {5, 6}, {9, 10}, {9, 12}}));
  EXPECT_EQ(an.depths.at(kappa), 7 * 2);
  EXPECT_EQ(an.gdot.order(), 13u + 3u + 5u * 6u);
  for (Vertex leaf : {6, 10, 12}) EXPECT_EQ(an.leaf_paths.at(leaf).size(), 15u);
}

TEST(AnalysisGraph, SingleEdgeTree) {
  auto star = families::star(3);
  auto res = build_closure(star, {0}, 1, Rational(1));
  auto an = build_analysis_graph(star, res);
  ASSERT_EQ(an.roots.size(), 1u);
  EXPECT_EQ(an.gdot.order(), res.gprime.order() + 1 + 2);
  EXPECT_EQ(an.depths.begin()->second, 3);
}

TEST(AnalysisGraph, NoTerminals) {
  auto g = families::grid(2, 2);
  auto res = build_closure(g, VertexSet::range(4), 1, Rational(1));
  auto an = build_analysis_graph(g, res);
  EXPECT_EQ(an.gdot, res.gprime);
}

TEST(AnalysisGraph, EmptyProjectionRejected) {
  auto p4 = families::path(4);
  auto res = build_closure(p4, {0}, 1, Rational(1));
  EXPECT_THROW(build_analysis_graph(p4, res), DomainError);
}

TEST(Translation, Examples) {
  auto star = families::star(3);
  auto res = build_closure(star, {0}, 1, Rational(1));
  auto an = build_analysis_graph(star, res);
  auto single = check_translation(star, res, an, {0});
  EXPECT_TRUE(single.holds);
  EXPECT_EQ(single.s, 1);
  EXPECT_EQ(single.gdot_value, 4);
  EXPECT_TRUE(check_translation(star, res, an, {}).holds);

  auto p5 = families::path(5);
  auto pr = build_closure(p5, {0, 4}, 2, Rational(1));
  auto pa = build_analysis_graph(p5, pr);
  auto pair = check_translation(p5, pr, pa, {0, 1});
  EXPECT_TRUE(pair.holds) << pair.gdot_value << " vs " << pair.s << "+" << pair.depth_sum;
  for (const auto& [subset, tree] : pr.kept_trees) EXPECT_TRUE(check_translation(p5, pr, pa, subset).holds);
}
