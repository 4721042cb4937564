#include "slidetok/caterpillar_structure.hpp"

#include <algorithm>

namespace slidetok {

CaterpillarStructure CaterpillarStructure::make(int n, std::vector<Vertex> spine,
                                                std::vector<std::vector<Vertex>> leaves) {
  CaterpillarStructure c;
  c.n = n;
  c.spine = std::move(spine);
  c.leaves = std::move(leaves);
  c.leaves.resize(c.spine.size());
  c.index.assign(n + 1, -1);
  c.on_spine.assign(n + 1, 0);
  for (int i = 0; i < c.spine_length(); ++i) {
    c.index[c.spine[i]] = i;
    c.on_spine[c.spine[i]] = 1;
    std::sort(c.leaves[i].begin(), c.leaves[i].end());
    for (Vertex l : c.leaves[i]) c.index[l] = i;
  }
  return c;
}

CaterpillarStructure recognize_caterpillar(const Graph& g) {
  const int n = g.n();
  if (!g.connected()) throw SolverError("DISCONNECTED", "graph has more than one component");
  if (n > 0 && g.m() != static_cast<std::size_t>(n - 1)) throw SolverError("CYCLIC", "graph contains a cycle");
  if (n == 0) return CaterpillarStructure::make(0, {}, {});
  if (n == 1) return CaterpillarStructure::make(1, {1}, {{}});
  if (n == 2) return CaterpillarStructure::make(2, {1}, {{2}});

  std::vector<int> spine_degree(n + 1, 0);
  std::vector<Vertex> inner;
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) < 2) continue;
    inner.push_back(v);
    for (Vertex w : g.neighbors(v)) spine_degree[v] += g.degree(w) >= 2;
    if (spine_degree[v] > 2) {
      throw SolverError("NOT_CATERPILLAR", "vertex " + std::to_string(v) + " has three non-leaf neighbours");
    }
  }
  // In a tree the non-leaf vertices induce a subtree, so max degree 2 makes it a path.
  Vertex start = 0;
  for (Vertex v : inner) {
    if (spine_degree[v] <= 1) {
      start = v;
      break;  // smallest-id end, since inner is ascending
    }
  }
  std::vector<Vertex> spine;
  std::vector<std::vector<Vertex>> leaves;
  Vertex prev = 0, cur = start;
  while (cur != 0) {
    spine.push_back(cur);
    leaves.emplace_back();
    Vertex next = 0;
    for (Vertex w : g.neighbors(cur)) {
      if (g.degree(w) < 2) {
        leaves.back().push_back(w);
      } else if (w != prev) {
        next = w;
      }
    }
    prev = cur;
    cur = next;
  }
  return CaterpillarStructure::make(n, std::move(spine), std::move(leaves));
}

bool is_caterpillar(const Graph& g) {
  try {
    recognize_caterpillar(g);
    return true;
  } catch (const SolverError&) {
    return false;
  }
}

bool is_caterpillar_forest(const Graph& g) {
  int comps = 0;
  component_ids(g, &comps);
  if (g.m() + comps != static_cast<std::size_t>(g.n())) return false;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (g.degree(v) < 2) continue;
    int inner = 0;
    for (Vertex w : g.neighbors(v)) inner += g.degree(w) >= 2;
    if (inner > 2) return false;
  }
  return true;
}

}  // namespace slidetok
