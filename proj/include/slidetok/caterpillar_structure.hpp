#pragma once

#include <vector>

#include "slidetok/graph.hpp"

namespace slidetok {

// Spine s_1..s_m stored 0-based, with every pendant vertex attached to its spine index.
// A single vertex is a one-vertex spine; a single edge is a one-vertex spine with one leaf.
struct CaterpillarStructure {
  int n = 0;
  std::vector<Vertex> spine;
  std::vector<std::vector<Vertex>> leaves;  // per spine index, ascending ids
  std::vector<int> index;                   // per vertex id: its spine index, -1 if not present
  std::vector<char> on_spine;               // per vertex id

  int spine_length() const { return static_cast<int>(spine.size()); }
  int index_of(Vertex v) const { return index[v]; }
  bool is_spine(Vertex v) const { return on_spine[v] != 0; }

  // Builds the lookup tables from spine and leaves.
  static CaterpillarStructure make(int n, std::vector<Vertex> spine, std::vector<std::vector<Vertex>> leaves);
};

// Throws SolverError with code CYCLIC, NOT_CATERPILLAR or DISCONNECTED.
// The spine is oriented so that its first vertex has the smaller id of the two ends.
CaterpillarStructure recognize_caterpillar(const Graph& g);

// Same as recognize_caterpillar but returns false instead of throwing.
bool is_caterpillar(const Graph& g);

// Every component is a caterpillar (isolated vertices included).
bool is_caterpillar_forest(const Graph& g);

}  // namespace slidetok
