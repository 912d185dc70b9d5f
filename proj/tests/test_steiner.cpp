#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "brute.hpp"
#include "lkcds/families.hpp"
#include "lkcds/steiner.hpp"

using namespace lkcds;

TEST(Steiner, Examples) {
  auto p5 = families::path(5);
  auto out = steiner_exact(p5, SteinerQuery::of_terminals({0, 4}));
  ASSERT_TRUE(out.found());
  EXPECT_EQ(out.tree->size(), 5);

  auto c6 = families::cycle(6);
  EXPECT_EQ(st_value(c6, SteinerQuery::of_groups({{0}, {2}, {4}})), 5);

  auto single = steiner_exact(c6, SteinerQuery::of_terminals({3}));
  ASSERT_TRUE(single.found());
  EXPECT_EQ(single.tree->vertices, VertexSet{3});
  EXPECT_TRUE(single.tree->edges.empty());
}

TEST(StValue, Examples) {
  EXPECT_EQ(st_value(families::complete(4), SteinerQuery::of_terminals({1, 2})), 2);
  auto split = parse_graph("p 4 2\n0 1\n2 3\n");
  EXPECT_EQ(st_value(split, SteinerQuery::of_terminals({0, 3})), std::nullopt);
  EXPECT_EQ(steiner_exact(split, SteinerQuery::of_terminals({0, 3})).status, SteinerOutcome::Status::infeasible);
  auto c6 = families::cycle(6);
  EXPECT_EQ(st_value(c6, SteinerQuery::of_groups({{0, 3}, {1}})), 2);
}

TEST(Steiner, DomainErrors) {
  auto c6 = families::cycle(6);
  EXPECT_THROW(steiner_exact(c6, SteinerQuery::of_terminals({})), DomainError);
  EXPECT_THROW(steiner_exact(c6, SteinerQuery::of_groups({{0, 1}, {1}})), DomainError);
  EXPECT_THROW(steiner_exact(c6, SteinerQuery::of_groups({{0}, {}})), DomainError);
  auto q = SteinerQuery::of_terminals({0, 1, 2, 3, 4, 5});
  q.group_limit = 4;
  EXPECT_THROW(steiner_exact(c6, q), DomainError);
}

TEST(Steiner, CapSemantics) {
  auto p5 = families::path(5);
  EXPECT_EQ(steiner_exact(p5, SteinerQuery::of_terminals({0, 4}, 4)).status, SteinerOutcome::Status::exceeds_cap);
  EXPECT_TRUE(steiner_exact(p5, SteinerQuery::of_terminals({0, 4}, 5)).found());
  EXPECT_EQ(st_value(p5, SteinerQuery::of_terminals({0, 4}, 2)), 5);
}

TEST(Steiner, AgreesWithExhaustiveEnumeration) {
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = families::random_connected(5 + seed % 7, 0.2, seed);
    const auto n = static_cast<Vertex>(g.order());
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t count = 1 + seed % 4;
    std::vector<VertexSet> groups;
    for (std::size_t i = 0, at = 0; i < count && at < perm.size(); ++i) {
      std::vector<Vertex> members{perm[at++]};
      if (rng() % 2 && at < perm.size()) members.push_back(perm[at++]);
      groups.push_back(VertexSet(members));
    }
    auto q = SteinerQuery::of_groups(groups);
    auto out = steiner_exact(g, q);
    auto expected = brute::min_group_tree(g, groups);
    ASSERT_TRUE(out.found());
    EXPECT_EQ(out.tree->size(), expected) << seed;
    EXPECT_TRUE(valid_steiner_tree(g, q, *out.tree));
    for (std::size_t i = 0; i < groups.size(); ++i) EXPECT_TRUE(groups[i].contains(out.tree->touched[i]));
    for (int cap = 1; cap <= static_cast<int>(n); ++cap) {
      auto capped = steiner_exact(g, SteinerQuery::of_groups(groups, cap));
      EXPECT_EQ(capped.found(), *expected <= cap);
    }
  }
}

TEST(Steiner, AddingTerminalNeverHelps) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = families::random_tree_with_chords(12, 4, seed);
    VertexSet terms{0};
    int last = 1;
    for (Vertex v : {3, 7, 11, 5}) {
      terms.insert(v);
      const int now = *st_value(g, SteinerQuery::of_terminals(terms));
      EXPECT_GE(now, last);
      last = now;
    }
  }
}

TEST(Steiner, Deterministic) {
  auto g = families::grid(4, 4);
  auto a = steiner_exact(g, SteinerQuery::of_terminals({0, 15, 3}));
  auto b = steiner_exact(g, SteinerQuery::of_terminals({0, 15, 3}));
  EXPECT_EQ(a.tree->vertices, b.tree->vertices);
  EXPECT_EQ(a.tree->edges, b.tree->edges);
}
