#include "slidetok/caterpillar.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace slidetok::cat {

namespace {

enum class Sweep { None, ExpectToken, ExpectEmpty };

std::vector<char> occupancy(int n, const IndependentSet& tokens) {
  std::vector<char> occ(n + 1, 0);
  for (Vertex v : tokens) {
    if (v >= 1 && v <= n) occ[v] = 1;
  }
  return occ;
}

void mark_path(LockMark& lm, std::vector<Vertex> path) {
  for (Vertex v : path) lm.marked[v] = 1;
  lm.paths.push_back(std::move(path));
}

}  // namespace

LockMark mark_locked(const CaterpillarStructure& cat, const IndependentSet& tokens) {
  const std::vector<char> occ = occupancy(cat.n, tokens);
  LockMark lm;
  lm.marked.assign(cat.n + 1, 0);
  Sweep state = Sweep::None;
  int open = -1;
  Vertex open_leaf = 0;
  std::vector<Vertex> leaf_tokens;
  for (int i = 0; i < cat.spine_length(); ++i) {
    const Vertex s = cat.spine[i];
    leaf_tokens.clear();
    for (Vertex l : cat.leaves[i]) {
      if (occ[l]) leaf_tokens.push_back(l);
    }
    for (std::size_t j = 1; j < leaf_tokens.size(); ++j) mark_path(lm, {leaf_tokens[0], s, leaf_tokens[j]});

    if (!occ[s] && !leaf_tokens.empty()) {
      // An empty spine vertex whose leaf holds a token ends the current path and may start the next.
      if (state == Sweep::ExpectEmpty) {
        std::vector<Vertex> path{open_leaf};
        for (int j = open; j <= i; ++j) path.push_back(cat.spine[j]);
        path.push_back(leaf_tokens[0]);
        mark_path(lm, std::move(path));
      }
      state = Sweep::ExpectToken;
      open = i;
      open_leaf = leaf_tokens[0];
    } else if (!occ[s]) {
      state = state == Sweep::ExpectEmpty ? Sweep::ExpectToken : Sweep::None;
    } else {
      // Interior tokens of a locked path sit on spine vertices without leaves.
      state = state == Sweep::ExpectToken && cat.leaves[i].empty() ? Sweep::ExpectEmpty : Sweep::None;
    }
  }
  return lm;
}

NormalizeResult normalize(const CaterpillarStructure& cat, const IndependentSet& blue, const IndependentSet& red) {
  const std::vector<char> ob = occupancy(cat.n, blue), orr = occupancy(cat.n, red);
  NormalizeResult res;
  std::vector<std::vector<Vertex>> kept(cat.spine_length());
  for (int i = 0; i < cat.spine_length(); ++i) {
    std::vector<Vertex> bl, rl;
    for (Vertex l : cat.leaves[i]) {
      if (ob[l]) bl.push_back(l);
      if (orr[l]) rl.push_back(l);
      if (ob[l] || orr[l]) kept[i].push_back(l);
    }
    if ((bl.size() >= 2 || rl.size() >= 2) && bl != rl) {
      res.witness = {"TWIN_LEAVES_BLOCKED", {cat.spine[i]}};
      return res;
    }
    if (bl.size() >= 2) res.value.blocked.push_back(i);
    if (kept[i].empty() && !cat.leaves[i].empty()) kept[i].push_back(cat.leaves[i].front());
  }
  res.yes = true;
  res.value.cat = CaterpillarStructure::make(cat.n, cat.spine, std::move(kept));
  return res;
}

DecideResult decide(const CaterpillarStructure& cat, const IndependentSet& blue, const IndependentSet& red) {
  DecideResult res;
  const std::vector<char> ob = occupancy(cat.n, blue), orr = occupancy(cat.n, red);
  const LockMark mb = mark_locked(cat, blue), mr = mark_locked(cat, red);

  std::vector<Vertex> differ;
  for (int i = 0; i < cat.spine_length(); ++i) {
    if (mb.marked[cat.spine[i]] != mr.marked[cat.spine[i]]) differ.push_back(cat.spine[i]);
    for (Vertex l : cat.leaves[i]) {
      if (mb.marked[l] != mr.marked[l]) differ.push_back(l);
    }
  }
  if (!differ.empty()) {
    std::sort(differ.begin(), differ.end());
    res.witness = {"LOCK_MISMATCH", differ};
    return res;
  }
  // Leaves cut off by a marked spine vertex form single-vertex components.
  for (int i = 0; i < cat.spine_length(); ++i) {
    if (!mb.marked[cat.spine[i]]) continue;
    for (Vertex l : cat.leaves[i]) {
      if (!mb.marked[l] && ob[l] != orr[l]) {
        res.witness = {"COMPONENT_UNBALANCED", {l}};
        return res;
      }
    }
  }
  for (int i = 0; i < cat.spine_length();) {
    if (mb.marked[cat.spine[i]]) {
      ++i;
      continue;
    }
    Component c;
    c.lo = i;
    while (i < cat.spine_length() && !mb.marked[cat.spine[i]]) {
      const Vertex s = cat.spine[i];
      if (ob[s]) c.blue.push_back(s);
      if (orr[s]) c.red.push_back(s);
      for (Vertex l : cat.leaves[i]) {
        if (ob[l]) c.blue.push_back(l);
        if (orr[l]) c.red.push_back(l);
      }
      ++i;
    }
    c.hi = i - 1;
    if (c.blue.size() != c.red.size()) {
      std::vector<Vertex> w;
      for (int j = c.lo; j <= c.hi; ++j) {
        w.push_back(cat.spine[j]);
        w.insert(w.end(), cat.leaves[j].begin(), cat.leaves[j].end());
      }
      std::sort(w.begin(), w.end());
      res.witness = {"COMPONENT_UNBALANCED", w};
      return res;
    }
    if (!c.blue.empty()) res.components.push_back(std::move(c));
  }
  res.yes = true;
  return res;
}

TargetAssignment assign_targets(const Component& component) {
  TargetAssignment g;
  for (std::size_t i = 0; i < component.blue.size(); ++i) g.pairs.emplace_back(component.blue[i], component.red[i]);
  return g;
}

std::vector<Direction> directions(const CaterpillarStructure& cat, const TargetAssignment& assignment) {
  std::vector<Direction> out;
  for (auto [b, r] : assignment.pairs) {
    int ib = cat.index_of(b), ir = cat.index_of(r);
    out.push_back(ib < ir ? Direction::R : ib > ir ? Direction::L : Direction::C);
  }
  return out;
}

namespace {

struct Candidate {
  std::vector<Vertex> walk;
  DetourPlan plan;
  int cost() const { return static_cast<int>(walk.size()) - 1; }
};

class Planner {
 public:
  Planner(const CaterpillarStructure& cat, const Component& comp) : cat_(cat), comp_(comp) {}

  // Can a token at p sit immediately left of a token at q?
  bool compatible(Vertex p, Vertex q) const {
    int a = cat_.index[p], b = cat_.index[q];
    if (a >= b) return false;
    return !(b == a + 1 && cat_.on_spine[p] && cat_.on_spine[q]);
  }

  std::vector<Vertex> direct(Vertex a, Vertex b) const {
    int ia = cat_.index[a], ib = cat_.index[b];
    if (ia == ib) {
      if (a == b) return {a};
      if (!cat_.on_spine[a] && !cat_.on_spine[b]) return {a, cat_.spine[ia], b};
      return {a, b};
    }
    std::vector<Vertex> w;
    if (!cat_.on_spine[a]) w.push_back(a);
    int step = ib > ia ? 1 : -1;
    for (int i = ia;; i += step) {
      w.push_back(cat_.spine[i]);
      if (i == ib) break;
    }
    if (!cat_.on_spine[b]) w.push_back(b);
    return w;
  }

  // Neighbours of spine vertex v that a token can step onto and come back from.
  std::vector<Vertex> excursion_targets(Vertex v) const {
    std::vector<Vertex> out;
    if (!cat_.on_spine[v]) return out;
    int i = cat_.index[v];
    if (!cat_.leaves[i].empty()) out.push_back(cat_.leaves[i].front());
    if (i - 1 >= comp_.lo) out.push_back(cat_.spine[i - 1]);
    if (i + 1 <= comp_.hi) out.push_back(cat_.spine[i + 1]);
    return out;
  }

  // Up to two round trips at v, in every order.
  std::vector<std::vector<Vertex>> excursion_sequences(Vertex v) const {
    std::vector<std::vector<Vertex>> seqs{{}};
    auto targets = excursion_targets(v);
    for (Vertex x : targets) seqs.push_back({x});
    for (Vertex x : targets) {
      for (Vertex y : targets) seqs.push_back({x, y});
    }
    return seqs;
  }

  std::vector<Candidate> candidates(Vertex b, Vertex r) const {
    std::vector<Candidate> out;
    const std::vector<Vertex> path = direct(b, r);
    auto starts = excursion_sequences(b);
    auto ends = b == r ? std::vector<std::vector<Vertex>>{{}} : excursion_sequences(r);
    for (const auto& s : starts) {
      for (const auto& e : ends) {
        Candidate c;
        c.plan.at_start = s;
        c.plan.at_target = e;
        c.walk.push_back(b);
        for (Vertex x : s) {
          c.walk.push_back(x);
          c.walk.push_back(b);
        }
        c.walk.insert(c.walk.end(), path.begin() + 1, path.end());
        for (Vertex x : e) {
          c.walk.push_back(x);
          c.walk.push_back(r);
        }
        out.push_back(std::move(c));
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) { return x.cost() < y.cost(); });
    return out;
  }

  // Searches the grid of joint progress (i steps of the left walk, j of the right).
  // When `steps` is given it receives 0 for a left move and 1 for a right move.
  bool interleave(const std::vector<Vertex>& left, const std::vector<Vertex>& right, std::vector<int>* steps) {
    const int n1 = static_cast<int>(left.size()), n2 = static_cast<int>(right.size());
    int max_left = 0, min_right = cat_.spine_length();
    for (Vertex v : left) max_left = std::max(max_left, cat_.index[v]);
    for (Vertex v : right) min_right = std::min(min_right, cat_.index[v]);
    if (max_left + 1 < min_right) {
      if (steps) {
        steps->assign(n2 - 1, 1);
        steps->insert(steps->end(), n1 - 1, 0);
      }
      return true;
    }
    if (!compatible(left[0], right[0])) return false;
    const std::size_t cells = static_cast<std::size_t>(n1) * n2;
    seen_.assign(cells, 0);
    if (steps) parent_.assign(cells, -1);
    stack_.clear();
    stack_.push_back(0);
    seen_[0] = 1;
    const int goal = n1 * n2 - 1;
    while (!stack_.empty()) {
      int cell = stack_.back();
      stack_.pop_back();
      if (cell == goal) {
        if (steps) {
          steps->clear();
          for (int c = goal; c != 0; c = parent_[c]) steps->push_back(parent_[c] / n2 == c / n2 ? 1 : 0);
          std::reverse(steps->begin(), steps->end());
        }
        return true;
      }
      int i = cell / n2, j = cell % n2;
      // Pushed last, popped first: prefer advancing the right token.
      const int next[2][2] = {{i + 1, j}, {i, j + 1}};
      for (const auto& nx : next) {
        if (nx[0] >= n1 || nx[1] >= n2) continue;
        int c = nx[0] * n2 + nx[1];
        if (seen_[c] || !compatible(left[nx[0]], right[nx[1]])) continue;
        seen_[c] = 1;
        if (steps) parent_[c] = cell;
        stack_.push_back(c);
      }
    }
    return false;
  }

 private:
  const CaterpillarStructure& cat_;
  const Component& comp_;
  std::vector<char> seen_;
  std::vector<int> parent_;
  std::vector<int> stack_;
};

// Orders all single steps so that every pairwise interleaving is respected.
// Prefers to keep moving the token that moved last.
std::vector<Move> merge_steps(const std::vector<std::vector<Vertex>>& walks,
                              const std::vector<std::vector<int>>& pair_steps) {
  const int k = static_cast<int>(walks.size());
  std::vector<int> offset(k + 1, 0);
  for (int j = 0; j < k; ++j) offset[j + 1] = offset[j] + static_cast<int>(walks[j].size()) - 1;
  const int total = offset[k];
  std::vector<std::vector<int>> succ(total);
  std::vector<int> indegree(total, 0);
  auto add = [&](int a, int b) {
    succ[a].push_back(b);
    ++indegree[b];
  };
  for (int j = 0; j < k; ++j) {
    for (int e = offset[j]; e + 1 < offset[j + 1]; ++e) add(e, e + 1);
  }
  for (int j = 0; j + 1 < k; ++j) {
    int t[2] = {0, 0};
    int prev = -1;
    for (int side : pair_steps[j]) {
      int ev = offset[j + side] + t[side]++;
      if (prev >= 0) add(prev, ev);
      prev = ev;
    }
  }
  std::vector<int> next(k);
  for (int j = 0; j < k; ++j) next[j] = offset[j];
  std::set<int> ready;
  for (int j = 0; j < k; ++j) {
    if (next[j] < offset[j + 1] && indegree[next[j]] == 0) ready.insert(j);
  }
  std::vector<Move> moves;
  moves.reserve(total);
  int last = -1;
  while (!ready.empty()) {
    int j = ready.count(last) ? last : *ready.begin();
    ready.erase(j);
    int ev = next[j]++;
    int t = ev - offset[j];
    moves.push_back({walks[j][t], walks[j][t + 1]});
    for (int s : succ[ev]) {
      if (--indegree[s] == 0) {
        int owner = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), s) - offset.begin()) - 1;
        if (next[owner] == s) ready.insert(owner);
      }
    }
    if (next[j] < offset[j + 1] && indegree[next[j]] == 0) ready.insert(j);
    last = j;
  }
  if (static_cast<int>(moves.size()) != total) throw std::logic_error("schedule: cyclic step constraints");
  return moves;
}

}  // namespace

Schedule schedule(const CaterpillarStructure& cat, const Component& component, const TargetAssignment& assignment) {
  Planner planner(cat, component);
  const int k = static_cast<int>(assignment.pairs.size());
  Schedule out;
  if (k == 0) return out;

  std::vector<std::vector<Candidate>> cands(k);
  for (int j = 0; j < k; ++j) cands[j] = planner.candidates(assignment.pairs[j].first, assignment.pairs[j].second);

  // cost[j][c]: cheapest total for tokens 0..j with token j using candidate c.
  const int kUnreachable = -1;
  std::vector<std::vector<int>> cost(k), pred(k);
  cost[0].resize(cands[0].size());
  pred[0].assign(cands[0].size(), -1);
  for (std::size_t c = 0; c < cands[0].size(); ++c) cost[0][c] = cands[0][c].cost();
  for (int j = 1; j < k; ++j) {
    std::vector<int> by_cost(cands[j - 1].size());
    std::iota(by_cost.begin(), by_cost.end(), 0);
    std::stable_sort(by_cost.begin(), by_cost.end(), [&](int a, int b) {
      if ((cost[j - 1][a] < 0) != (cost[j - 1][b] < 0)) return cost[j - 1][b] < 0;
      return cost[j - 1][a] < cost[j - 1][b];
    });
    cost[j].assign(cands[j].size(), kUnreachable);
    pred[j].assign(cands[j].size(), -1);
    for (std::size_t c = 0; c < cands[j].size(); ++c) {
      for (int p : by_cost) {
        if (cost[j - 1][p] < 0) break;
        if (planner.interleave(cands[j - 1][p].walk, cands[j][c].walk, nullptr)) {
          cost[j][c] = cost[j - 1][p] + cands[j][c].cost();
          pred[j][c] = p;
          break;
        }
      }
    }
  }
  int best = -1;
  for (std::size_t c = 0; c < cands[k - 1].size(); ++c) {
    if (cost[k - 1][c] >= 0 && (best < 0 || cost[k - 1][c] < cost[k - 1][best])) best = static_cast<int>(c);
  }
  if (best < 0) throw std::logic_error("schedule: no feasible detour plan for component");

  std::vector<int> chosen(k);
  for (int j = k - 1; j >= 0; --j) {
    chosen[j] = best;
    best = pred[j][best];
  }
  for (int j = 0; j < k; ++j) {
    out.plans.push_back(cands[j][chosen[j]].plan);
    out.walks.push_back(cands[j][chosen[j]].walk);
  }
  std::vector<std::vector<int>> pair_steps(k > 0 ? k - 1 : 0);
  for (int j = 0; j + 1 < k; ++j) planner.interleave(out.walks[j], out.walks[j + 1], &pair_steps[j]);
  out.moves = merge_steps(out.walks, pair_steps);
  return out;
}

namespace {

struct TreePart {
  Graph graph;
  std::vector<Vertex> to_global;  // local id -> global id
};

std::vector<TreePart> split_trees(const Graph& g) {
  int count = 0;
  std::vector<int> comp = component_ids(g, &count);
  std::vector<std::vector<Vertex>> members(count);
  std::vector<Vertex> local(g.n() + 1, 0);
  for (Vertex v = 1; v <= g.n(); ++v) {
    members[comp[v]].push_back(v);
    local[v] = static_cast<Vertex>(members[comp[v]].size());
  }
  std::vector<std::vector<Edge>> edges(count);
  for (auto [u, v] : g.edges()) edges[comp[u]].emplace_back(local[u], local[v]);
  std::vector<TreePart> parts;
  for (int c = 0; c < count; ++c) {
    TreePart p{Graph(static_cast<int>(members[c].size()), edges[c]), {0}};
    p.to_global.insert(p.to_global.end(), members[c].begin(), members[c].end());
    parts.push_back(std::move(p));
  }
  return parts;
}

SolveResult solve_tree(const Graph& g, const IndependentSet& blue, const IndependentSet& red, bool decide_only) {
  CaterpillarStructure structure = recognize_caterpillar(g);
  NormalizeResult norm = normalize(structure, blue, red);
  if (!norm.yes) return SolveResult::no(norm.witness.reason, norm.witness.vertices);
  const CaterpillarStructure& c = norm.value.cat;
  DecideResult decision = decide(c, blue, red);
  if (!decision.yes) return SolveResult::no(decision.witness.reason, decision.witness.vertices);
  SolveResult res;
  res.yes = true;
  res.sequence.initial = blue;
  if (decide_only) return res;
  for (const Component& comp : decision.components) {
    Schedule s = schedule(c, comp, assign_targets(comp));
    res.sequence.moves.insert(res.sequence.moves.end(), s.moves.begin(), s.moves.end());
  }
  return res;
}

}  // namespace

SolveResult solve_caterpillar(const Graph& g, const IndependentSet& blue, const IndependentSet& red,
                              bool decide_only) {
  for (const IndependentSet* set : {&blue, &red}) {
    if (!set->independent_in(g)) throw SolverError("NOT_INDEPENDENT", "token set is not independent");
  }
  if (blue.k() != red.k()) return SolveResult::no("CARDINALITY_MISMATCH", {});
  if (g.connected()) {
    if (g.n() == 2) throw SolverError("STRONG_TWINS", "K2 has twin endpoints", {{1, 2}});
    return solve_tree(g, blue, red, decide_only);
  }

  std::vector<TreePart> parts = split_trees(g);
  std::vector<int> comp_of(g.n() + 1, 0);
  std::vector<Vertex> local(g.n() + 1, 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].graph.n() == 2) {
      throw SolverError("STRONG_TWINS", "a K2 component has twin endpoints",
                        {{parts[p].to_global[1], parts[p].to_global[2]}});
    }
    for (Vertex v = 1; v <= parts[p].graph.n(); ++v) {
      comp_of[parts[p].to_global[v]] = static_cast<int>(p);
      local[parts[p].to_global[v]] = v;
    }
    recognize_caterpillar(parts[p].graph);
  }
  std::vector<std::vector<Vertex>> pb(parts.size()), pr(parts.size());
  for (Vertex v : blue) pb[comp_of[v]].push_back(local[v]);
  for (Vertex v : red) pr[comp_of[v]].push_back(local[v]);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (pb[p].size() != pr[p].size()) {
      return SolveResult::no("COMPONENT_UNBALANCED",
                             std::vector<Vertex>(parts[p].to_global.begin() + 1, parts[p].to_global.end()));
    }
  }
  SolveResult res;
  res.yes = true;
  res.sequence.initial = blue;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    SolveResult part = solve_tree(parts[p].graph, IndependentSet(pb[p]), IndependentSet(pr[p]), decide_only);
    if (!part.yes) {
      for (Vertex& v : part.witness.vertices) v = parts[p].to_global[v];
      return SolveResult::no(part.witness.reason, part.witness.vertices);
    }
    for (const Move& mv : part.sequence.moves) {
      res.sequence.moves.push_back({parts[p].to_global[mv.from], parts[p].to_global[mv.to]});
    }
  }
  return res;
}

}  // namespace slidetok::cat
