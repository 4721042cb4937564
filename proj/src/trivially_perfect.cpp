#include "slidetok/trivially_perfect.hpp"

#include <algorithm>
#include <deque>

namespace slidetok::tp {

MpqTree build_forest(const IntervalRepresentation& rep) {
  MpqTree t;
  t.node_of.assign(rep.n() + 1, -1);
  t.nodes.reserve(rep.n());
  std::vector<int> stack;
  for (const auto& e : rep.events()) {
    if (e.side == Side::Left) {
      int id = static_cast<int>(t.nodes.size());
      MpqNode node;
      node.vertices.push_back(e.vertex);
      if (!stack.empty()) {
        node.parent = stack.back();
        node.depth = t.nodes[stack.back()].depth + 1;
        t.nodes[stack.back()].children.push_back(id);
      } else {
        t.roots.push_back(id);
      }
      t.nodes.push_back(std::move(node));
      t.node_of[e.vertex] = id;
      stack.push_back(id);
    } else {
      if (stack.empty() || stack.back() != t.node_of[e.vertex]) {
        throw SolverError("NOT_TRIVIALLY_PERFECT",
                          "interval " + std::to_string(e.vertex) + " partially overlaps another");
      }
      stack.pop_back();
    }
  }
  return t;
}

std::vector<Edge> strong_twins(const MpqTree& tree) {
  std::vector<Edge> out;
  for (const auto& node : tree.nodes) {
    if (node.children.size() != 1) continue;
    Vertex a = node.vertices.front();
    Vertex b = tree.nodes[node.children.front()].vertices.front();
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MpqTree build_mpq(const IntervalRepresentation& rep) {
  MpqTree t = build_forest(rep);
  if (t.roots.size() > 1) throw SolverError("DISCONNECTED", "containment forest has more than one root");
  if (auto twins = strong_twins(t); !twins.empty()) {
    throw SolverError("STRONG_TWINS", "a node of the containment tree has a single child", twins);
  }
  return t;
}

int lca(const MpqTree& tree, Vertex u, Vertex w) {
  int a = tree.node_of[u], b = tree.node_of[w];
  while (a != b && a >= 0 && b >= 0) {
    if (tree.nodes[a].depth >= tree.nodes[b].depth) {
      a = tree.nodes[a].parent;
    } else {
      b = tree.nodes[b].parent;
    }
  }
  return a == b ? a : -1;
}

std::vector<Vertex> lca_star(const MpqTree& tree, Vertex u, Vertex w) {
  std::vector<Vertex> out;
  for (int x = lca(tree, u, w); x >= 0; x = tree.nodes[x].parent) {
    out.insert(out.end(), tree.nodes[x].vertices.begin(), tree.nodes[x].vertices.end());
  }
  return out;
}

namespace {

// Tokens gathered at a node: loose blue/red tokens plus green (already matched) ones.
struct Bag {
  int blues = 0;
  int reds = 0;
  int greens = 0;
  Vertex blue = 0;
  Vertex red = 0;

  void absorb(const Bag& o) {
    blues += o.blues;
    reds += o.reds;
    greens += o.greens;
    if (o.blue) blue = o.blue;
    if (o.red) red = o.red;
  }
};

std::vector<Vertex> node_vertices(const MpqTree& tree, int node) { return tree.nodes[node].vertices; }

}  // namespace

MergeResult merge_pass(const MpqTree& tree, const IndependentSet& blue, const IndependentSet& red) {
  MergeResult res;
  const int count = static_cast<int>(tree.nodes.size());

  // Token counts per tree first: tokens never leave their component.
  std::vector<int> tree_of(count, -1);
  std::vector<int> balance(tree.roots.size(), 0);
  for (std::size_t r = 0; r < tree.roots.size(); ++r) tree_of[tree.roots[r]] = static_cast<int>(r);
  for (int x = 0; x < count; ++x) {
    if (tree_of[x] < 0) tree_of[x] = tree_of[tree.nodes[x].parent];
  }
  for (Vertex v : blue) ++balance[tree_of[tree.node_of[v]]];
  for (Vertex v : red) --balance[tree_of[tree.node_of[v]]];
  for (std::size_t r = 0; r < balance.size(); ++r) {
    if (balance[r] != 0) {
      res.witness_node = tree.roots[r];
      res.witness = {"COMPONENT_UNBALANCED", node_vertices(tree, tree.roots[r])};
      return res;
    }
  }

  std::vector<Bag> bag(count);
  std::vector<int> pending(count, 0);
  std::deque<int> frontier;
  for (int x = 0; x < count; ++x) {
    pending[x] = static_cast<int>(tree.nodes[x].children.size());
    if (pending[x] == 0) frontier.push_back(x);
  }
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop_front();
    Bag& b = bag[x];
    for (Vertex v : tree.nodes[x].vertices) {
      if (blue.contains(v)) {
        ++b.blues;
        b.blue = v;
      }
      if (red.contains(v)) {
        ++b.reds;
        b.red = v;
      }
    }
    if (b.blues >= 2 || b.reds >= 2) {
      res.witness_node = x;
      res.merge_case = 4;
      res.witness = {"MERGE_CASE4", node_vertices(tree, x)};
      return res;
    }
    if (b.greens >= 1 && b.blues + b.reds >= 1) {
      res.witness_node = x;
      res.merge_case = 5;
      res.witness = {"MERGE_CASE5", node_vertices(tree, x)};
      return res;
    }
    if (b.blues == 1 && b.reds == 1) {
      res.assignment.pairs.emplace_back(b.blue, b.red);
      b = Bag{};
      b.greens = 1;
    } else if (b.greens >= 2) {
      b.greens = 1;
    }
    int p = tree.nodes[x].parent;
    if (p >= 0) {
      bag[p].absorb(b);
      if (--pending[p] == 0) frontier.push_back(p);
    }
  }
  res.yes = true;
  return res;
}

ReconfigSequence emit_sequence(const MpqTree& tree, const TargetAssignment& assignment, const IndependentSet& blue) {
  ReconfigSequence seq;
  seq.initial = blue;
  for (auto [b, r] : assignment.pairs) {
    if (b == r) continue;
    Vertex via = tree.nodes[lca(tree, b, r)].vertices.front();
    if (via == b || via == r) {
      seq.moves.push_back({b, r});
    } else {
      seq.moves.push_back({b, via});
      seq.moves.push_back({via, r});
    }
  }
  return seq;
}

SolveResult solve_tp(const IntervalRepresentation& rep, const IndependentSet& blue, const IndependentSet& red,
                     bool decide_only) {
  MpqTree tree = build_forest(rep);
  if (auto twins = strong_twins(tree); !twins.empty()) {
    throw SolverError("STRONG_TWINS", "a node of the containment tree has a single child", twins);
  }
  for (const IndependentSet* set : {&blue, &red}) {
    if (!independent_in(rep, *set)) throw SolverError("NOT_INDEPENDENT", "token set is not independent");
  }
  if (blue.k() != red.k()) return SolveResult::no("CARDINALITY_MISMATCH", {});
  MergeResult merged = merge_pass(tree, blue, red);
  if (!merged.yes) return SolveResult::no(merged.witness.reason, merged.witness.vertices);
  SolveResult res;
  res.yes = true;
  if (decide_only) {
    res.sequence.initial = blue;
  } else {
    res.sequence = emit_sequence(tree, merged.assignment, blue);
  }
  return res;
}

}  // namespace slidetok::tp
