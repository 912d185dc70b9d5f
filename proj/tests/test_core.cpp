#include <gtest/gtest.h>

#include <random>

#include "lkcds/core.hpp"
#include "lkcds/families.hpp"

using namespace lkcds;

namespace {

DominationCore expect_core(const CoreOutcome& out) {
  EXPECT_TRUE(std::holds_alternative<DominationCore>(out));
  return std::get<DominationCore>(out);
}

}  // namespace

TEST(FindCore, StarExact) {
  auto core = expect_core(find_core(families::star(5), 1, 1, CoreMode::exact));
  EXPECT_EQ(core.z, (VertexSet{1, 2}));
  EXPECT_EQ(core.certified, Certification::exhaustive);
}

TEST(FindCore, Trivial) {
  auto g = families::grid(3, 3);
  auto core = expect_core(find_core(g, 2, 1, CoreMode::trivial));
  EXPECT_EQ(core.z, VertexSet::range(9));
  EXPECT_EQ(core.certified, Certification::trivial);
}

// The centre's ball contains every leaf's ball, so the inclusion rule drops
// the centre and keeps all leaves.
TEST(FindCore, StarHeuristic) {
  auto core = expect_core(find_core(families::star(5), 1, 1, CoreMode::heuristic));
  EXPECT_EQ(core.z, (VertexSet{1, 2, 3, 4, 5}));
  EXPECT_EQ(core.certified, Certification::heuristic_sound);
  EXPECT_TRUE(core_verify(families::star(5), core.z, 1, 1));
}

TEST(FindCore, ExactRejects) {
  EXPECT_TRUE(std::holds_alternative<Reject>(find_core(families::path(9), 1, 1, CoreMode::exact)));
  EXPECT_THROW(find_core(parse_graph("p 2 0"), 1, 1, CoreMode::exact), DomainError);
}

TEST(FindCore, BudgetErrorIsExplicit) {
  EXPECT_THROW(find_core(families::grid(5, 5), 4, 1, CoreMode::exact, SearchBudget{3, {}}), BudgetError);
}

TEST(ConnectedCore, Examples) {
  auto p9 = families::path(9);
  EXPECT_TRUE(std::holds_alternative<Reject>(connected_core(p9, DominationCore{{0}, 1, 1, Certification::trivial})));
  auto star = families::star(5);
  auto out = expect_core(connected_core(star, DominationCore{{1, 2}, 1, 1, Certification::exhaustive}));
  EXPECT_EQ(out.z, (VertexSet{0, 1, 2}));
  auto same = expect_core(connected_core(star, DominationCore{{0, 1}, 1, 1, Certification::exhaustive}));
  EXPECT_EQ(same.z, (VertexSet{0, 1}));
}

TEST(CoreVerify, Examples) {
  auto star = families::star(5);
  EXPECT_TRUE(core_verify(star, {1, 2}, 1, 1));
  EXPECT_FALSE(core_verify(star, {1}, 1, 1));
  EXPECT_TRUE(core_verify(families::grid(3, 3), VertexSet::range(9), 2, 1));
}

TEST(FindCore, OutputsAreCores) {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    auto g = families::random_tree_with_chords(8 + seed % 12, seed % 4, seed);
    for (int k = 1; k <= 4; ++k)
      for (int r = 1; r <= 2; ++r)
        for (CoreMode mode : {CoreMode::exact, CoreMode::heuristic}) {
          auto out = find_core(g, k, r, mode);
          if (std::holds_alternative<Reject>(out)) continue;
          const auto& core = std::get<DominationCore>(out);
          EXPECT_TRUE(core_verify(g, core.z, k, r)) << seed << " k=" << k << " r=" << r;
          auto connected = connected_core(g, core);
          if (auto* c = std::get_if<DominationCore>(&connected)) {
            EXPECT_TRUE(c->z.includes(core.z));
            EXPECT_TRUE(induces_connected(g, c->z));
            EXPECT_TRUE(core_verify(g, c->z, k, r));
          }
        }
  }
}

TEST(CoreVerify, SupersetsStayCores) {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto g = families::random_connected(12, 0.15, seed);
    auto out = find_core(g, 2, 1, CoreMode::exact);
    if (std::holds_alternative<Reject>(out)) continue;
    auto z = std::get<DominationCore>(out).z;
    for (int trial = 0; trial < 4; ++trial) {
      VertexSet bigger = z;
      for (Vertex v = 0; v < 12; ++v)
        if (rng() % 3 == 0) bigger.insert(v);
      EXPECT_TRUE(core_verify(g, bigger, 2, 1));
    }
  }
}

TEST(CoreMode, Names) {
  EXPECT_EQ(parse_core_mode("heuristic"), CoreMode::heuristic);
  EXPECT_THROW(parse_core_mode("fast"), DomainError);
  EXPECT_EQ(to_string(Certification::heuristic_sound), "heuristic-sound");
}
