#pragma once

#include <vector>

#include "slidetok/caterpillar_structure.hpp"
#include "slidetok/graph.hpp"

namespace slidetok::cat {

struct LockMark {
  std::vector<char> marked;                  // per vertex id
  std::vector<std::vector<Vertex>> paths;    // each path lists its vertices end to end
};

// Left-to-right sweep over the spine. A spine vertex with two or more leaf
// tokens is reported as the three-vertex locked paths through it.
LockMark mark_locked(const CaterpillarStructure& cat, const IndependentSet& tokens);

struct Normalized {
  CaterpillarStructure cat;  // leaves trimmed to the useful ones
  std::vector<int> blocked;  // spine indices whose sibling leaves hold tokens in both sets
};

struct NormalizeResult {
  bool yes = false;
  Normalized value;
  NoWitness witness;
};

// Sibling leaf tokens cannot move. They must coincide in blue and red, otherwise
// NO TWIN_LEAVES_BLOCKED. Free leaves are dropped except one per spine vertex,
// and leaves carrying a blue or a red token are always kept.
NormalizeResult normalize(const CaterpillarStructure& cat, const IndependentSet& blue, const IndependentSet& red);

// A maximal run lo..hi of unmarked spine indices with its leaves. Tokens are
// listed left to right by spine index.
struct Component {
  int lo = 0;
  int hi = 0;
  std::vector<Vertex> blue;
  std::vector<Vertex> red;
};

struct DecideResult {
  bool yes = false;
  std::vector<Component> components;  // only those holding tokens
  NoWitness witness;
};

DecideResult decide(const CaterpillarStructure& cat, const IndependentSet& blue, const IndependentSet& red);

// i-th blue from the left goes to the i-th red from the left.
TargetAssignment assign_targets(const Component& component);

std::vector<Direction> directions(const CaterpillarStructure& cat, const TargetAssignment& assignment);

// Round trips a token makes next to its start and next to its target.
// Each entry is a neighbour of the start (or target) visited and left again.
struct DetourPlan {
  std::vector<Vertex> at_start;
  std::vector<Vertex> at_target;
};

struct Schedule {
  std::vector<DetourPlan> plans;
  std::vector<std::vector<Vertex>> walks;  // per token, start to target
  std::vector<Move> moves;
};

// Shortest schedule for one component of a YES instance. Throws std::logic_error
// if no plan exists, which would mean the component was not a YES component.
Schedule schedule(const CaterpillarStructure& cat, const Component& component, const TargetAssignment& assignment);

// Forests of caterpillars are accepted; each tree is solved separately.
SolveResult solve_caterpillar(const Graph& g, const IndependentSet& blue, const IndependentSet& red,
                              bool decide_only = false);

}  // namespace slidetok::cat
