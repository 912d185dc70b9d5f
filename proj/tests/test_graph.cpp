#include <gtest/gtest.h>

#include "brute.hpp"
#include "lkcds/families.hpp"
#include "lkcds/graph.hpp"

using namespace lkcds;

TEST(ParseGraph, HeaderAndEdges) {
  auto g = parse_graph("p 3 2\n0 1\n1 2\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g, families::path(3));
}

TEST(ParseGraph, IsolatedVertexFromHeader) {
  auto g = parse_graph("p 1 0");
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(ParseGraph, CompleteGraph) {
  auto g = parse_graph("# K4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  EXPECT_EQ(g.num_edges(), 6u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 3u);
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  try {
    parse_graph("p 3 2\n0 1\n1 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_graph("0 0\n"), ParseError);
  EXPECT_THROW(parse_graph("0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_graph("p 2 1\n0 5\n"), ParseError);
  EXPECT_THROW(parse_graph("p 3 3\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("0 1\np 2 1\n"), ParseError);
}

TEST(ParseGraph, Dimacs) {
  auto g = parse_graph("c comment\np tw 3 2\n1 2\ne 2 3\n", GraphFormat::dimacs);
  EXPECT_EQ(g, families::path(3));
  EXPECT_THROW(parse_graph("p tw 2 1\n0 1\n", GraphFormat::dimacs), ParseError);
}

TEST(ParseGraph, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = families::random_tree_with_chords(12, 5, seed);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
  auto lonely = Graph(4);
  EXPECT_EQ(parse_graph(serialize_graph(lonely)).order(), 4u);
}

TEST(Subdivision, Examples) {
  auto k3 = families::complete(3);
  EXPECT_EQ(r_subdivision(k3, 1), k3);
  auto c6 = r_subdivision(k3, 2);
  EXPECT_EQ(c6.order(), 6u);
  EXPECT_EQ(c6.num_edges(), 6u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(c6.degree(v), 2u);
  auto p4 = r_subdivision(families::path(2), 3);
  EXPECT_EQ(p4.order(), 4u);
  EXPECT_TRUE(p4.has_edge(0, 2) && p4.has_edge(2, 3) && p4.has_edge(3, 1));
  EXPECT_THROW(r_subdivision(k3, 0), DomainError);
}

TEST(Subdivision, Counts) {
  for (int r = 1; r <= 4; ++r) {
    auto g = families::random_tree_with_chords(9, 4, static_cast<std::uint64_t>(r));
    auto s = r_subdivision(g, r);
    EXPECT_EQ(s.order(), g.order() + static_cast<std::size_t>(r - 1) * g.num_edges());
    EXPECT_EQ(s.num_edges(), static_cast<std::size_t>(r) * g.num_edges());
  }
}

TEST(LexProduct, Examples) {
  EXPECT_EQ(lex_product(families::path(2), families::complete(2)), families::complete(4));
  auto g = families::cycle(5);
  EXPECT_EQ(lex_product(g, Graph(1)), g);
  auto h = families::path(4);
  EXPECT_EQ(lex_product(Graph(1), h), h);
  EXPECT_THROW(lex_product(Graph(), h), DomainError);
}

TEST(LexProduct, DegreeFormula) {
  auto g = families::random_tree_with_chords(6, 3, 4);
  auto h = families::random_tree_with_chords(3, 1, 5);
  auto p = lex_product(g, h);
  ASSERT_EQ(p.order(), 18u);
  for (Vertex x = 0; x < 6; ++x)
    for (Vertex y = 0; y < 3; ++y)
      EXPECT_EQ(p.degree(x * 3 + y), g.degree(x) * 3 + h.degree(y));
}

TEST(Bfs, Examples) {
  auto p5 = families::path(5);
  auto d = bfs_layers(p5, {0}, 2);
  EXPECT_EQ(d.reached_set(), (VertexSet{0, 1, 2}));
  EXPECT_EQ(d[2], 2);

  auto c6 = families::cycle(6);
  auto e = bfs_layers(c6, {0}, 3, {3});
  EXPECT_EQ(e[2], 2);
  EXPECT_EQ(e[4], 2);
  EXPECT_EQ(e[3], 3);

  auto all = bfs_layers(c6, VertexSet::range(6), 0);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(all[v], 0);
}

TEST(Bfs, ForbiddenSourceStillExpands) {
  auto p3 = families::path(3);
  auto d = bfs_layers(p3, {0}, -1, {0, 1});
  EXPECT_EQ(d[1], 1);
  EXPECT_FALSE(d.reached(2));
}

TEST(Bfs, AgreesWithFloyd) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = families::random_connected(3 + seed % 10, 0.2, seed);
    auto dist = brute::floyd(g);
    for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
      auto d = bfs_layers(g, {s}, -1);
      for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) EXPECT_EQ(d[v], dist[s][v]);
    }
  }
}

TEST(Subgraphs, WitnessCertifies) {
  auto g = families::grid(3, 3);
  auto sub = induced_subgraph(g, {0, 1, 4, 8});
  EXPECT_EQ(sub.graph.num_edges(), 2u);
  EXPECT_TRUE(sub.witness.certifies(sub.graph, g));
  auto edges = std::vector<Edge>{{0, 1}, {1, 4}};
  auto es = edge_subgraph(g, {0, 1, 4}, edges);
  EXPECT_EQ(es.graph.num_edges(), 2u);
  std::vector<Edge> bogus{{0, 4}};
  EXPECT_THROW(edge_subgraph(g, {0, 4}, bogus), ContractError);
  SubgraphWitness wrong{{0, 8}};
  EXPECT_FALSE(wrong.certifies(families::path(2), g));
}

TEST(Connectivity, Components) {
  auto g = parse_graph("p 5 2\n0 1\n3 4\n");
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(components(g), (std::vector<int>{0, 0, 1, 2, 2}));
  EXPECT_TRUE(induces_connected(g, {0, 1}));
  EXPECT_FALSE(induces_connected(g, {0, 3}));
  EXPECT_TRUE(induces_connected(g, {}));
}
