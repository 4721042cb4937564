#include <gtest/gtest.h>

#include "slidetok/crosscheck.hpp"
#include "slidetok/generator.hpp"
#include "slidetok/oracle.hpp"

using namespace slidetok;
using namespace slidetok::oracle;

namespace {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 2; i <= leaves + 1; ++i) e.emplace_back(1, i);
  return Graph(leaves + 1, e);
}

IndependentSet set(std::vector<Vertex> v) { return IndependentSet(std::move(v)); }

std::vector<Move> moves_of(const std::vector<std::pair<Move, IndependentSet>>& succ) {
  std::vector<Move> out;
  for (const auto& s : succ) out.push_back(s.first);
  return out;
}

}  // namespace

TEST(StateKey, EqualIffSameSet) {
  EXPECT_EQ(StateKey(set({1, 300})), StateKey(set({300, 1})));
  EXPECT_NE(StateKey(set({1, 300})), StateKey(set({1, 301})));
  EXPECT_NE(StateKey(set({256})), StateKey(set({1})));
  EXPECT_EQ(StateKey(set({7, 70000})).vertices(), (std::vector<Vertex>{7, 70000}));
}

TEST(Neighbors, PathOfThree) {
  EXPECT_EQ(moves_of(neighbors(path(3), set({2}))), (std::vector<Move>{{2, 1}, {2, 3}}));
}

TEST(Neighbors, StarLeavesAreStuck) { EXPECT_TRUE(neighbors(star(3), set({2, 3})).empty()); }

TEST(Neighbors, PathOfFour) {
  auto succ = neighbors(path(4), set({1, 3}));
  EXPECT_EQ(moves_of(succ), (std::vector<Move>{{3, 4}}));
  EXPECT_EQ(succ[0].second, set({1, 4}));
}

TEST(Bfs, Identity) {
  OracleResult r = bfs(path(5), set({1, 4}), set({1, 4}));
  EXPECT_TRUE(r.reachable());
  EXPECT_EQ(*r.distance, 0);
}

TEST(Bfs, SingleTokenOnP8) {
  OracleResult r = bfs(path(8), set({1}), set({8}));
  EXPECT_EQ(*r.distance, 7);
  EXPECT_EQ(r.sequence->moves.size(), 7u);
}

TEST(Bfs, StarUnreachable) {
  OracleResult r = bfs(star(3), set({2, 3}), set({3, 4}));
  EXPECT_EQ(r.status, Status::Unreachable);
  EXPECT_FALSE(r.distance);
  EXPECT_EQ(r.states_explored, 1u);
}

TEST(Bfs, PreconditionsAndBudget) {
  EXPECT_THROW(bfs(path(4), set({1}), set({2, 4})), std::invalid_argument);
  EXPECT_THROW(bfs(path(4), set({1, 2}), set({1, 3})), std::invalid_argument);
  OracleResult r = bfs(path(30), set({1, 3, 5}), set({26, 28, 30}), 50);
  EXPECT_EQ(r.status, Status::CapExceeded);
  EXPECT_FALSE(distances_from(path(30), set({1, 3, 5}), 50));
}

TEST(IsStuck, Examples) {
  // Spine 1, 2, 3 with leaves 4 on 1 and 5 on 3; tokens l1, s2, l3.
  Graph five(5, {{1, 2}, {2, 3}, {1, 4}, {3, 5}});
  EXPECT_TRUE(is_stuck(five, set({2, 4, 5})));
  EXPECT_FALSE(is_stuck(path(6), set({4})));
  EXPECT_TRUE(is_stuck(star(4), set({2, 3})));
}

// Symmetry, sequence validity, and stuck states reaching nothing else, on every
// small caterpillar and proper interval graph.
TEST(Bfs, Properties) {
  for (InstanceClass cls : {InstanceClass::Caterpillar, InstanceClass::Proper}) {
    for (int n = 3; n <= 7; ++n) {
      for (const Instance& shape : enumerate_shapes(cls, n)) {
        Graph g = shape.graph();
        for (int k = 1; k <= 2; ++k) {
          auto sets = independent_sets(g, k);
          for (const auto& a : sets) {
            auto from_a = *distances_from(g, a);
            ASSERT_EQ(is_stuck(g, a), from_a.size() == 1);
            for (const auto& b : sets) {
              OracleResult r = bfs(g, a, b);
              auto it = from_a.find(StateKey(b));
              ASSERT_EQ(r.reachable(), it != from_a.end());
              if (!r.reachable()) continue;
              ASSERT_EQ(*r.distance, it->second);
              ASSERT_EQ(*r.distance, *bfs(g, b, a).distance);
              ASSERT_TRUE(validate_sequence(g, a, b, *r.sequence));
            }
          }
        }
      }
    }
  }
}

TEST(LabeledDistance, TokensCannotSwapOnAPath) {
  Graph g = path(5);
  EXPECT_EQ(detail::labeled_distance(g, {1, 3}, {3, 5}), 4);
  EXPECT_FALSE(detail::labeled_distance(g, {1, 3}, {3, 1}));
  EXPECT_THROW(detail::labeled_distance(path(30), {1, 3, 5}, {26, 28, 30}, 10), std::runtime_error);
}
