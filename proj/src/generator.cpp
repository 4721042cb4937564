#include "slidetok/generator.hpp"

#include <algorithm>
#include <optional>

namespace slidetok {

int Rng::uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

bool Rng::chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

InstanceClass parse_instance_class(const std::string& name) {
  if (name == "proper") return InstanceClass::Proper;
  if (name == "tp") return InstanceClass::TriviallyPerfect;
  if (name == "caterpillar") return InstanceClass::Caterpillar;
  throw std::invalid_argument("unknown class '" + name + "' (expected proper, tp or caterpillar)");
}

const char* to_string(InstanceClass c) {
  switch (c) {
    case InstanceClass::Proper: return "proper";
    case InstanceClass::TriviallyPerfect: return "tp";
    case InstanceClass::Caterpillar: return "caterpillar";
  }
  return "?";
}

namespace {

std::vector<Vertex> shuffled_labels(int n, Rng& rng) {
  std::vector<Vertex> label(n + 1);
  for (int i = 0; i <= n; ++i) label[i] = i;
  std::vector<Vertex> tail(label.begin() + 1, label.end());
  rng.shuffle(tail);
  std::copy(tail.begin(), tail.end(), label.begin() + 1);
  return label;
}

// Random LEFT/RIGHT word for a connected proper interval graph without twins.
// Interval i is the i-th LEFT and the i-th RIGHT. Consecutive intervals i, i+1
// are twins exactly when no RIGHT falls between their LEFTs and no LEFT falls
// between their RIGHTs, so the walk forbids that pattern as it goes.
std::optional<std::vector<Side>> proper_word(int n, Rng& rng) {
  std::vector<Side> word;
  word.reserve(2 * n);
  std::vector<char> lefts_adjacent(n + 2, 0);  // pair (i, i+1) has no RIGHT between the LEFTs
  int opened = 0, closed = 0, unresolved = 0;
  bool last_left = false, need_left = false;
  const int cap = rng.uniform(2, 5);
  while (closed < n) {
    const int open = opened - closed;
    bool can_left = opened < n;
    if (can_left && opened + 1 == n && ((last_left && n > 1) || unresolved > 0)) can_left = false;
    const bool can_right = open > 0 && !need_left && !(open == 1 && opened < n);
    if (!can_left && !can_right) return std::nullopt;
    bool left = can_left;
    if (can_left && can_right) left = rng.chance(open <= 1 ? 0.8 : open >= cap ? 0.15 : 0.5);
    if (left) {
      ++opened;
      if (last_left) {
        lefts_adjacent[opened - 1] = 1;
        ++unresolved;
      }
      last_left = true;
      need_left = false;
      word.push_back(Side::Left);
    } else {
      ++closed;
      need_left = lefts_adjacent[closed] != 0;
      if (need_left) --unresolved;
      last_left = false;
      word.push_back(Side::Right);
    }
  }
  return word;
}

// Rooted tree in which every internal node has at least two children.
std::vector<std::vector<int>> branching_tree(int n, Rng& rng) {
  std::vector<std::vector<int>> children(n);
  std::vector<int> leaves{0}, internal;
  int nodes = 1;
  while (nodes < n) {
    const int remaining = n - nodes;
    if (remaining >= 2 && (internal.empty() || rng.chance(0.5))) {
      int at = rng.uniform(0, static_cast<int>(leaves.size()) - 1);
      int v = leaves[at];
      leaves[at] = leaves.back();
      leaves.pop_back();
      internal.push_back(v);
      for (int c = 0; c < 2; ++c) {
        children[v].push_back(nodes);
        leaves.push_back(nodes++);
      }
    } else {
      int v = internal[rng.uniform(0, static_cast<int>(internal.size()) - 1)];
      children[v].push_back(nodes);
      leaves.push_back(nodes++);
    }
  }
  return children;
}

template <class Blocked>
std::optional<std::vector<Vertex>> random_independent(int n, int k, Rng& rng, Blocked&& try_pick) {
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  rng.shuffle(order);
  std::vector<Vertex> picked;
  for (Vertex v : order) {
    if (static_cast<int>(picked.size()) == k) break;
    if (try_pick(v)) picked.push_back(v);
  }
  if (static_cast<int>(picked.size()) < k) return std::nullopt;
  return picked;
}

std::optional<std::vector<Vertex>> independent_in_graph(const Graph& g, int k, Rng& rng) {
  std::vector<char> blocked(g.n() + 1, 0);
  return random_independent(g.n(), k, rng, [&](Vertex v) {
    if (blocked[v]) return false;
    blocked[v] = 1;
    for (Vertex w : g.neighbors(v)) blocked[w] = 1;
    return true;
  });
}

// Antichain of the containment forest: no chosen interval contains another.
std::optional<std::vector<Vertex>> independent_in_forest(const std::vector<Vertex>& parent,
                                                         const std::vector<std::vector<Vertex>>& children, int k,
                                                         Rng& rng) {
  const int n = static_cast<int>(parent.size()) - 1;
  std::vector<char> blocked(n + 1, 0);
  std::vector<Vertex> stack;
  return random_independent(n, k, rng, [&](Vertex v) {
    if (blocked[v]) return false;
    // An unblocked vertex has no chosen relative, so its whole subtree is still unblocked.
    stack.assign(1, v);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      blocked[x] = 1;
      stack.insert(stack.end(), children[x].begin(), children[x].end());
    }
    for (Vertex a = parent[v]; a != 0 && !blocked[a]; a = parent[a]) blocked[a] = 1;
    return true;
  });
}

constexpr int kShapeAttempts = 20;
constexpr int kSetAttempts = 50;

}  // namespace

IntervalRepresentation random_proper_representation(int n, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto word = proper_word(n, rng);
    if (!word) continue;
    std::vector<Vertex> label = shuffled_labels(n, rng);
    std::vector<Endpoint> events;
    events.reserve(2 * n);
    int l = 0, r = 0;
    for (Side s : *word) events.push_back({label[s == Side::Left ? ++l : ++r], s});
    return IntervalRepresentation(std::move(events));
  }
  throw SolverError("INFEASIBLE", "no twin-free proper interval word found");
}

IntervalRepresentation random_nesting(int n, Rng& rng) {
  if (n == 2) throw SolverError("INFEASIBLE", "every connected nesting of two intervals has twins");
  auto children = branching_tree(n, rng);
  std::vector<Vertex> label = shuffled_labels(n, rng);
  std::vector<Endpoint> events;
  events.reserve(2 * n);
  // Iterative depth-first walk; a negative entry closes the node.
  std::vector<int> stack{1};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x < 0) {
      events.push_back({label[-x], Side::Right});
      continue;
    }
    events.push_back({label[x], Side::Left});
    stack.push_back(-x);
    const auto& ch = children[x - 1];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it + 1);
  }
  return IntervalRepresentation(std::move(events));
}

std::vector<Edge> random_caterpillar(int n, Rng& rng) {
  if (n == 2) throw SolverError("INFEASIBLE", "the only two-vertex tree has twins");
  std::vector<Edge> edges;
  if (n <= 1) return edges;
  std::vector<Vertex> label = shuffled_labels(n, rng);
  const int m = rng.uniform(1, n - 2);
  for (int i = 1; i < m; ++i) edges.emplace_back(i, i + 1);
  int next = m + 1;
  if (m >= 2) {
    edges.emplace_back(1, next++);
    edges.emplace_back(m, next++);
  }
  while (next <= n) edges.emplace_back(rng.uniform(1, m), next++);
  for (auto& [u, v] : edges) {
    u = label[u];
    v = label[v];
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

Instance gen_instance(InstanceClass cls, int n, int k, std::uint64_t seed) {
  if (n < 1) throw SolverError("INFEASIBLE", "n must be at least 1");
  if (k < 0 || k > n) throw SolverError("INFEASIBLE", "k must lie in 0..n");
  Rng rng(seed);
  for (int attempt = 0; attempt < kShapeAttempts; ++attempt) {
    Instance inst;
    inst.n = n;
    std::optional<std::vector<Vertex>> blue, red;
    auto draw = [&](auto&& pick) {
      for (int s = 0; s < kSetAttempts && !blue; ++s) blue = pick();
      for (int s = 0; s < kSetAttempts && !red; ++s) red = pick();
    };
    switch (cls) {
      case InstanceClass::Proper: {
        inst.rep = random_proper_representation(n, rng);
        Graph g = intersection_graph(*inst.rep);
        draw([&] { return independent_in_graph(g, k, rng); });
        break;
      }
      case InstanceClass::TriviallyPerfect: {
        inst.rep = random_nesting(n, rng);
        std::vector<Vertex> parent(n + 1, 0), open;
        std::vector<std::vector<Vertex>> children(n + 1);
        for (const auto& e : inst.rep->events()) {
          if (e.side == Side::Left) {
            if (!open.empty()) {
              parent[e.vertex] = open.back();
              children[open.back()].push_back(e.vertex);
            }
            open.push_back(e.vertex);
          } else {
            open.pop_back();
          }
        }
        draw([&] { return independent_in_forest(parent, children, k, rng); });
        break;
      }
      case InstanceClass::Caterpillar: {
        inst.edges = random_caterpillar(n, rng);
        Graph g(n, inst.edges);
        draw([&] { return independent_in_graph(g, k, rng); });
        break;
      }
    }
    if (blue && red) {
      inst.blue = IndependentSet(*blue);
      inst.red = IndependentSet(*red);
      return inst;
    }
  }
  throw SolverError("INFEASIBLE", "no independent sets of size " + std::to_string(k) + " found");
}

}  // namespace slidetok
