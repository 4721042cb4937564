#include <gtest/gtest.h>

#include "slidetok/crosscheck.hpp"
#include "slidetok/generator.hpp"
#include "slidetok/oracle.hpp"
#include "slidetok/trivially_perfect.hpp"

using namespace slidetok;
using namespace slidetok::tp;

namespace {

IntervalRepresentation rep(const char* text) { return parse_interval_representation(text); }

// Root 1 with children 2, 3, 4 (the star K_{1,3}).
const char* kStar3 = "L1 L2 R2 L3 R3 L4 R4 R1";
const char* kStar4 = "L1 L2 R2 L3 R3 L4 R4 L5 R5 R1";
// Root 1; child 2 with children 3, 4; child 5.
const char* kDeep = "L1 L2 L3 R3 L4 R4 R2 L5 R5 R1";
// Root 1; child 2 with children 3, 4; child 5 with children 6, 7.
const char* kDeep7 = "L1 L2 L3 R3 L4 R4 R2 L5 L6 R6 L7 R7 R5 R1";

std::vector<Vertex> node_vertices(const MpqTree& t, const std::vector<int>& nodes) {
  std::vector<Vertex> out;
  for (int x : nodes) out.push_back(t.nodes[x].vertices.front());
  return out;
}

bool is_ancestor(const MpqTree& t, int a, int x) {
  for (; x != -1; x = t.nodes[x].parent)
    if (x == a) return true;
  return false;
}

std::string code_of(const char* text, std::vector<Vertex> b, std::vector<Vertex> r) {
  try {
    solve_tp(rep(text), IndependentSet(b), IndependentSet(r));
  } catch (const SolverError& e) {
    return e.code();
  }
  return "OK";
}

}  // namespace

TEST(BuildMpq, RootWithTwoChildren) {
  MpqTree t = build_mpq(rep("L1 L2 R2 L3 R3 R1"));
  ASSERT_EQ(t.nodes.size(), 3u);
  EXPECT_EQ(t.nodes[t.root()].vertices, (std::vector<Vertex>{1}));
  EXPECT_EQ(node_vertices(t, t.nodes[t.root()].children), (std::vector<Vertex>{2, 3}));
}

TEST(BuildMpq, SingleNode) {
  MpqTree t = build_mpq(rep("L1 R1"));
  ASSERT_EQ(t.nodes.size(), 1u);
  EXPECT_TRUE(t.nodes[0].children.empty());
}

TEST(BuildMpq, StarOfStars) {
  MpqTree t = build_mpq(rep(kDeep));
  EXPECT_EQ(node_vertices(t, t.nodes[t.root()].children), (std::vector<Vertex>{2, 5}));
  EXPECT_EQ(node_vertices(t, t.nodes[t.node_of[2]].children), (std::vector<Vertex>{3, 4}));
  EXPECT_TRUE(t.nodes[t.node_of[5]].children.empty());
}

TEST(BuildMpq, Errors) {
  auto code = [](const char* text) {
    try {
      build_mpq(rep(text));
    } catch (const SolverError& e) {
      return e.code();
    }
    return std::string("OK");
  };
  EXPECT_EQ(code("L1 L2 R1 R2"), "NOT_TRIVIALLY_PERFECT");
  EXPECT_EQ(code("L1 L3 R1 L2 R3 R2"), "NOT_TRIVIALLY_PERFECT");
  EXPECT_EQ(code("L1 R1 L2 R2"), "DISCONNECTED");
  EXPECT_EQ(code("L1 L2 R2 R1"), "STRONG_TWINS");
}

// Property: every vertex sits in one node, and an ancestor's interval contains
// the descendant's interval (checked against the representation).
TEST(BuildMpq, ContainmentProperties) {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    IntervalRepresentation r = random_nesting(3 + i % 40, rng);
    MpqTree t = build_mpq(r);
    std::vector<int> seen(r.n() + 1, 0);
    for (const MpqNode& node : t.nodes)
      for (Vertex v : node.vertices) ++seen[v];
    for (Vertex v = 1; v <= r.n(); ++v) ASSERT_EQ(seen[v], 1);
    for (Vertex u = 1; u <= r.n(); ++u) {
      for (Vertex v = 1; v <= r.n(); ++v) {
        if (u == v) continue;
        bool anc = is_ancestor(t, t.node_of[u], t.node_of[v]);
        ASSERT_EQ(anc, r.contains(u, v));
      }
    }
  }
}

TEST(Lca, Examples) {
  MpqTree two = build_mpq(rep("L1 L2 R2 L3 R3 R1"));
  EXPECT_EQ(lca(two, 2, 3), two.root());
  EXPECT_EQ(lca(two, 2, 2), two.node_of[2]);
  MpqTree deep = build_mpq(rep(kDeep));
  EXPECT_EQ(lca(deep, 3, 4), deep.node_of[2]);
}

TEST(LcaStar, Examples) {
  MpqTree two = build_mpq(rep("L1 L2 R2 L3 R3 R1"));
  auto sorted = [](std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(lca_star(two, 2, 3)), (std::vector<Vertex>{1}));
  EXPECT_EQ(sorted(lca_star(two, 2, 2)), (std::vector<Vertex>{1, 2}));
  MpqTree deep = build_mpq(rep(kDeep));
  EXPECT_EQ(sorted(lca_star(deep, 3, 5)), (std::vector<Vertex>{1}));
}

TEST(MergePass, SinglePairMeetsAtRoot) {
  MpqTree t = build_mpq(rep(kStar3));
  MergeResult m = merge_pass(t, IndependentSet({2}), IndependentSet({3}));
  ASSERT_TRUE(m.yes);
  EXPECT_EQ(m.assignment.pairs, (std::vector<std::pair<Vertex, Vertex>>{{2, 3}}));
}

TEST(MergePass, GreenMeetsLooseToken) {
  MpqTree t = build_mpq(rep(kStar3));
  MergeResult m = merge_pass(t, IndependentSet({2, 3}), IndependentSet({3, 4}));
  EXPECT_FALSE(m.yes);
  EXPECT_EQ(m.merge_case, 5);
  EXPECT_EQ(m.witness_node, t.root());
  EXPECT_FALSE(oracle::bfs(intersection_graph(rep(kStar3)), IndependentSet({2, 3}), IndependentSet({3, 4})).reachable());
}

TEST(MergePass, TwoBluesMeet) {
  MpqTree t = build_mpq(rep(kStar4));
  MergeResult m = merge_pass(t, IndependentSet({2, 3}), IndependentSet({4, 5}));
  EXPECT_FALSE(m.yes);
  EXPECT_EQ(m.merge_case, 4);
  EXPECT_EQ(m.witness_node, t.root());
  EXPECT_FALSE(oracle::bfs(intersection_graph(rep(kStar4)), IndependentSet({2, 3}), IndependentSet({4, 5})).reachable());
}

TEST(EmitSequence, TwoHopThroughCentre) {
  MpqTree t = build_mpq(rep(kStar3));
  TargetAssignment g{{{2, 3}}};
  EXPECT_EQ(emit_sequence(t, g, IndependentSet({2})).moves, (std::vector<Move>{{2, 1}, {1, 3}}));
  TargetAssignment fixed{{{2, 2}}};
  EXPECT_TRUE(emit_sequence(t, fixed, IndependentSet({2})).moves.empty());
}

TEST(EmitSequence, SiblingSubtrees) {
  IntervalRepresentation r = rep(kDeep7);
  SolveResult res = solve_tp(r, IndependentSet({3, 6}), IndependentSet({4, 7}));
  ASSERT_TRUE(res.yes);
  EXPECT_EQ(res.sequence.moves.size(), 4u);
  EXPECT_EQ(*oracle::bfs(intersection_graph(r), IndependentSet({3, 6}), IndependentSet({4, 7})).distance, 4);
}

TEST(SolveTp, NoTokens) {
  SolveResult res = solve_tp(rep(kStar3), IndependentSet(), IndependentSet());
  EXPECT_TRUE(res.yes);
  EXPECT_TRUE(res.sequence.moves.empty());
}

TEST(SolveTp, NoWitnesses) {
  SolveResult res = solve_tp(rep(kStar3), IndependentSet({2, 3}), IndependentSet({3, 4}));
  EXPECT_FALSE(res.yes);
  EXPECT_EQ(res.witness.reason, "MERGE_CASE5");
  EXPECT_EQ(res.witness.vertices, (std::vector<Vertex>{1}));
  res = solve_tp(rep(kStar4), IndependentSet({2, 3}), IndependentSet({4, 5}));
  EXPECT_EQ(res.witness.reason, "MERGE_CASE4");
  res = solve_tp(rep(kStar4), IndependentSet({2}), IndependentSet({4, 5}));
  EXPECT_EQ(res.witness.reason, "CARDINALITY_MISMATCH");
}

TEST(SolveTp, Forest) {
  // Two stars side by side; each is solved separately.
  const char* forest = "L1 L2 R2 L3 R3 R1 L4 L5 R5 L6 R6 R4";
  SolveResult res = solve_tp(rep(forest), IndependentSet({2, 5}), IndependentSet({3, 6}));
  ASSERT_TRUE(res.yes);
  EXPECT_EQ(res.sequence.moves.size(), 4u);
  res = solve_tp(rep(forest), IndependentSet({2, 3}), IndependentSet({5, 6}));
  EXPECT_FALSE(res.yes);
  EXPECT_EQ(res.witness.reason, "COMPONENT_UNBALANCED");
}

TEST(SolveTp, RejectsBadInput) {
  EXPECT_EQ(code_of("L1 L2 R2 R1", {1}, {1}), "STRONG_TWINS");
  EXPECT_EQ(code_of(kStar3, {1, 2}, {3, 4}), "NOT_INDEPENDENT");
  EXPECT_EQ(code_of("L1 L2 R1 R2", {1}, {1}), "NOT_TRIVIALLY_PERFECT");
}

// Every connected trivially perfect graph has diameter at most two.
TEST(SolveTp, DiameterAtMostTwo) {
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    Graph g = intersection_graph(random_nesting(3 + i, rng));
    for (Vertex u = 1; u <= g.n(); ++u)
      for (int d : bfs_distances(g, u)) ASSERT_LE(d, 2);
  }
}

// For the produced assignment no pair's LCA is an ancestor of another pair's LCA,
// and assignments that break this are never realisable token by token.
TEST(SolveTp, LcaIncomparability) {
  for (int n = 3; n <= 7; ++n) {
    for (const Instance& shape : enumerate_shapes(InstanceClass::TriviallyPerfect, n)) {
      if (!is_connected(*shape.rep)) continue;
      MpqTree t = build_mpq(*shape.rep);
      Graph g = shape.graph();
      for (int k = 2; k <= 3; ++k) {
        auto sets = independent_sets(g, k);
        for (const auto& blue : sets) {
          for (const auto& red : sets) {
            MergeResult m = merge_pass(t, blue, red);
            if (m.yes) {
              for (auto [b1, r1] : m.assignment.pairs) {
                for (auto [b2, r2] : m.assignment.pairs) {
                  if (b1 == b2) continue;
                  int a1 = lca(t, b1, r1), a2 = lca(t, b2, r2);
                  ASSERT_FALSE(is_ancestor(t, a1, a2)) << serialize(*shape.rep);
                }
              }
            }
            // Every bijection whose LCAs are comparable is unrealisable.
            std::vector<Vertex> target = red.vertices();
            do {
              bool comparable = false;
              for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                  if (i != j && blue.vertices()[i] != target[i] && blue.vertices()[j] != target[j] &&
                      is_ancestor(t, lca(t, blue.vertices()[i], target[i]), lca(t, blue.vertices()[j], target[j])))
                    comparable = true;
              if (comparable) {
                ASSERT_FALSE(oracle::detail::labeled_distance(g, blue.vertices(), target).has_value())
                    << serialize(*shape.rep);
              }
            } while (std::next_permutation(target.begin(), target.end()));
          }
        }
      }
    }
  }
}

// Oracle equality on random instances with up to 12 vertices, and the 2k bound.
TEST(SolveTp, MatchesOracleOnRandomInstances) {
  Rng rng(99);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    int n = rng.uniform(3, 12);
    int k = rng.uniform(1, 4);
    Instance inst;
    try {
      inst = gen_instance(InstanceClass::TriviallyPerfect, n, k, rng.next());
    } catch (const SolverError&) {
      continue;
    }
    SolveResult res = solve_tp(*inst.rep, inst.blue, inst.red);
    auto r = oracle::bfs(inst.graph(), inst.blue, inst.red);
    ASSERT_EQ(res.yes, r.reachable()) << format_instance_inline(inst);
    if (res.yes) {
      ASSERT_EQ(static_cast<int>(res.sequence.moves.size()), *r.distance) << format_instance_inline(inst);
      ASSERT_LE(res.sequence.moves.size(), 2 * inst.blue.k());
      ASSERT_TRUE(validate_sequence(inst.graph(), inst.blue, inst.red, res.sequence));
    }
    ++checked;
  }
  EXPECT_GT(checked, 1500);
}
