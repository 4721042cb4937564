#pragma once

#include <vector>

#include "slidetok/graph.hpp"
#include "slidetok/interval.hpp"

namespace slidetok::tp {

struct MpqNode {
  std::vector<Vertex> vertices;
  int parent = -1;
  std::vector<int> children;
  int depth = 0;
};

// Containment forest of a nested representation. Nodes are numbered in the
// order their LEFT endpoint appears, so a parent always precedes its children.
struct MpqTree {
  std::vector<MpqNode> nodes;
  std::vector<int> roots;
  std::vector<int> node_of;  // vertex id -> node index

  int root() const { return roots.empty() ? -1 : roots.front(); }
};

// Forest version without the connectivity and twin checks.
// Throws SolverError NOT_TRIVIALLY_PERFECT on partial overlaps.
MpqTree build_forest(const IntervalRepresentation& rep);

// Throws SolverError NOT_TRIVIALLY_PERFECT, DISCONNECTED or STRONG_TWINS.
MpqTree build_mpq(const IntervalRepresentation& rep);

// A node with exactly one child shares its closed neighbourhood with that child.
std::vector<Edge> strong_twins(const MpqTree& tree);

int lca(const MpqTree& tree, Vertex u, Vertex w);
std::vector<Vertex> lca_star(const MpqTree& tree, Vertex u, Vertex w);

struct MergeResult {
  bool yes = false;
  TargetAssignment assignment;  // pairs in formation order
  int witness_node = -1;
  int merge_case = 0;  // 4 or 5 when a node refuses to merge
  NoWitness witness;
};

// Bottom-up frontier sweep over every tree of the forest.
MergeResult merge_pass(const MpqTree& tree, const IndependentSet& blue, const IndependentSet& red);

ReconfigSequence emit_sequence(const MpqTree& tree, const TargetAssignment& assignment,
                               const IndependentSet& blue);

// Works on forests: every tree is solved on its own.
SolveResult solve_tp(const IntervalRepresentation& rep, const IndependentSet& blue, const IndependentSet& red,
                     bool decide_only = false);

}  // namespace slidetok::tp
