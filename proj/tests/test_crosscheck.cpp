#include <gtest/gtest.h>

#include "slidetok/crosscheck.hpp"

using namespace slidetok;

TEST(Enumerate, ShapeCounts) {
  // Frozen from the enumerators; the small cases are checked by hand below.
  EXPECT_EQ(enumerate_shapes(InstanceClass::Proper, 1).size(), 1u);
  EXPECT_EQ(enumerate_shapes(InstanceClass::Proper, 2).size(), 1u);      // L1 R1 L2 R2
  EXPECT_EQ(enumerate_shapes(InstanceClass::Proper, 3).size(), 2u);      // P3 and three isolated vertices
  EXPECT_EQ(enumerate_shapes(InstanceClass::Caterpillar, 3).size(), 1u);  // P3
  EXPECT_EQ(enumerate_shapes(InstanceClass::Caterpillar, 4).size(), 2u);  // P4 and K_{1,3}
  EXPECT_EQ(enumerate_shapes(InstanceClass::Caterpillar, 5).size(), 3u);  // P5, K_{1,4}, the chair
  EXPECT_EQ(enumerate_shapes(InstanceClass::TriviallyPerfect, 3).size(), 2u);
}

TEST(IndependentSets, PathOfFour) {
  Graph g(4, {{1, 2}, {2, 3}, {3, 4}});
  auto sets = independent_sets(g, 2);
  ASSERT_EQ(sets.size(), 3u);
  EXPECT_EQ(sets[0], IndependentSet({1, 3}));
  EXPECT_EQ(sets[2], IndependentSet({2, 4}));
  EXPECT_EQ(independent_sets(g, 0).size(), 1u);
  EXPECT_TRUE(independent_sets(g, 3).empty());
}

TEST(Crosscheck, SmallExhaustiveRunsClean) {
  for (InstanceClass cls : {InstanceClass::Proper, InstanceClass::TriviallyPerfect, InstanceClass::Caterpillar}) {
    CrosscheckOptions options;
    options.cls = cls;
    options.max_n = 6;
    options.max_k = 2;
    options.exhaustive = true;
    options.jobs = 2;
    CrosscheckReport report = crosscheck(options);
    EXPECT_GT(report.checked, 0u);
    EXPECT_TRUE(report.mismatches.empty()) << report.format();
  }
}

TEST(Crosscheck, EmptyRun) {
  CrosscheckOptions options;
  options.count = 0;
  CrosscheckReport report = crosscheck(options);
  EXPECT_EQ(report.format(), "CHECKED 0 MISMATCHES 0\n");
}

TEST(Crosscheck, RandomModeIsDeterministic) {
  CrosscheckOptions options;
  options.cls = InstanceClass::Caterpillar;
  options.max_n = 12;
  options.count = 50;
  options.seed = 9;
  CrosscheckReport a = crosscheck(options);
  options.jobs = 3;
  CrosscheckReport b = crosscheck(options);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.yes, b.yes);
  EXPECT_TRUE(a.mismatches.empty());
}

TEST(Crosscheck, CorruptedSolverIsCaught) {
  // Adds a slide there and back to every non-empty answer.
  SolverFn base = default_solver(InstanceClass::Caterpillar);
  SolverFn corrupted = [&](const Instance& inst) {
    SolveResult r = base(inst);
    if (r.yes && !r.sequence.moves.empty()) {
      Move last = r.sequence.moves.back();
      r.sequence.moves.push_back({last.to, last.from});
      r.sequence.moves.push_back(last);
    }
    return r;
  };
  CrosscheckOptions options;
  options.cls = InstanceClass::Caterpillar;
  options.max_n = 5;
  options.max_k = 2;
  options.exhaustive = true;
  CrosscheckReport report = crosscheck(options, corrupted);
  ASSERT_FALSE(report.mismatches.empty());
  const std::string text = report.format();
  EXPECT_NE(text.find("MISMATCH n 3 | edges 2 | 1 2 | 1 3 | blue 1 | red 2 solver=3 oracle=1"), std::string::npos)
      << text;
}

TEST(Crosscheck, WrongDecisionIsCaught) {
  SolverFn always_no = [](const Instance&) { return SolveResult::no("TEST", {}); };
  Instance inst = parse_instance("n 3 | edges 2 | 1 2 | 2 3 | blue 1 | red 3");
  CrosscheckReport report;
  check_instance(inst, always_no, InstanceClass::Caterpillar, oracle::kDefaultBudget, report);
  ASSERT_EQ(report.mismatches.size(), 1u);
  EXPECT_EQ(report.mismatches[0].solver, "NO");
  EXPECT_EQ(report.mismatches[0].oracle, "2");
}
