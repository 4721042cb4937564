#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "slidetok/generator.hpp"
#include "slidetok/instance.hpp"
#include "slidetok/oracle.hpp"

namespace slidetok {

using SolverFn = std::function<SolveResult(const Instance&)>;

// The class-specific solver that crosscheck uses when none is supplied.
SolverFn default_solver(InstanceClass cls);

struct CrosscheckOptions {
  InstanceClass cls = InstanceClass::Proper;
  int max_n = 8;
  int max_k = 3;
  bool exhaustive = false;
  int count = 100;  // random mode only
  std::uint64_t seed = 0;
  std::uint64_t budget = oracle::kDefaultBudget;
  int jobs = 1;
};

struct Mismatch {
  std::string instance;  // single-line instance text
  std::string solver;    // move count, NO, or ERROR:<code>
  std::string oracle;    // move count, NO, or CAP_EXCEEDED
  std::string note;      // empty for plain count/decision disagreements
};

struct CrosscheckReport {
  std::uint64_t checked = 0;
  std::uint64_t yes = 0;
  // Trivially perfect YES answers that slide more than 2k times (also listed as mismatches).
  std::uint64_t bound_violations = 0;
  std::vector<Mismatch> mismatches;

  // One MISMATCH line per entry, then `CHECKED <n> MISMATCHES <m>`.
  std::string format() const;
};

// Compares `solver` (default_solver(cls) when empty) against the BFS oracle.
// Exhaustive mode enumerates every shape from enumerate_shapes with n <= max_n and
// every pair of independent sets of each size 1..max_k; random mode draws `count`
// instances from gen_instance with n in [3, max_n] and k in [1, max_k].
CrosscheckReport crosscheck(const CrosscheckOptions& options, const SolverFn& solver = {});

// Compares one instance; appends to `report`. Exposed for replaying report lines.
void check_instance(const Instance& inst, const SolverFn& solver, InstanceClass cls, std::uint64_t budget,
                    CrosscheckReport& report);

// Every twin-free shape of the class with exactly n vertices and identity labels.
// Proper and trivially perfect shapes are endpoint words, possibly disconnected;
// caterpillars are connected and counted once per reversal.
std::vector<Instance> enumerate_shapes(InstanceClass cls, int n);

// All independent sets of size k in ascending lexicographic order.
std::vector<IndependentSet> independent_sets(const Graph& g, int k);

}  // namespace slidetok
