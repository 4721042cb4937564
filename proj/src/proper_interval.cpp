#include "slidetok/proper_interval.hpp"

#include <algorithm>
#include <queue>

namespace slidetok::proper {

CanonicalOrder canonical_order(const IntervalRepresentation& rep) {
  if (classify(rep) != GraphClass::Proper) throw SolverError("NOT_PROPER", "some interval contains another");
  if (!is_connected(rep)) throw SolverError("DISCONNECTED", "interval graph has more than one component");
  const int n = rep.n();
  CanonicalOrder o;
  o.vertex_at.assign(1, 0);
  o.position_of.assign(n + 1, 0);
  o.lo.assign(n + 1, 0);
  o.hi.assign(n + 1, 0);
  int lefts = 0, rights = 0;
  for (const auto& e : rep.events()) {
    if (e.side == Side::Left) {
      ++lefts;
      o.vertex_at.push_back(e.vertex);
      o.position_of[e.vertex] = lefts;
      // LEFT and RIGHT orders agree, so the closed intervals seen so far are exactly 1..rights.
      o.lo[lefts] = rights + 1;
    } else {
      ++rights;
      o.hi[o.position_of[e.vertex]] = lefts;
    }
  }
  return o;
}

std::vector<Edge> strong_twins(const CanonicalOrder& order) {
  std::vector<Edge> out;
  for (int p = 1; p < order.n(); ++p) {
    if (order.lo[p] == order.lo[p + 1] && order.hi[p] == order.hi[p + 1]) {
      Vertex a = order.vertex_at[p], b = order.vertex_at[p + 1];
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  return out;
}

namespace {

std::vector<int> sorted_positions(const CanonicalOrder& order, const IndependentSet& set) {
  std::vector<int> pos;
  pos.reserve(set.k());
  for (Vertex v : set) pos.push_back(order.position_of[v]);
  std::sort(pos.begin(), pos.end());
  return pos;
}

}  // namespace

ColoredString build_string(const CanonicalOrder& order, const IndependentSet& blue, const IndependentSet& red) {
  if (blue.k() != red.k()) throw SolverError("CARDINALITY_MISMATCH", "blue and red differ in size");
  auto bp = sorted_positions(order, blue);
  auto rp = sorted_positions(order, red);
  ColoredString s;
  s.reserve(bp.size() * 2);
  std::size_t i = 0, j = 0;
  while (i < bp.size() || j < rp.size()) {
    if (j == rp.size() || (i < bp.size() && bp[i] <= rp[j])) {
      s.push_back({order.vertex_at[bp[i++]], Color::Blue});
    } else {
      s.push_back({order.vertex_at[rp[j++]], Color::Red});
    }
  }
  return s;
}

std::vector<int> compute_heights(const ColoredString& s) {
  std::vector<int> h(s.size() + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) h[i + 1] = h[i] + (s[i].color == Color::Blue ? 1 : -1);
  return h;
}

std::vector<Block> partition_blocks(const ColoredString& s, const std::vector<int>& h) {
  std::vector<Block> blocks;
  int begin = 0;
  for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
    if (h[i] != 0) continue;
    Block b;
    b.begin = begin;
    b.end = i;
    b.starts_with = s[begin].color;
    b.first_token = begin / 2;
    b.last_token = i / 2;
    blocks.push_back(b);
    begin = i;
  }
  return blocks;
}

std::vector<int> block_order(const std::vector<Block>& blocks, const ColoredString& s) {
  const int count = static_cast<int>(blocks.size());
  std::vector<int> indegree(count, 0);
  // before[j] is +1 when block j must precede j+1, -1 when j+1 must precede j.
  std::vector<int> before(count, 0);
  for (int j = 0; j + 1 < count; ++j) {
    Color last = s[blocks[j].end - 1].color;
    Color first = s[blocks[j + 1].begin].color;
    if (last == Color::Blue && first == Color::Red) {
      before[j] = 1;
      ++indegree[j + 1];
    } else if (last == Color::Red && first == Color::Blue) {
      before[j] = -1;
      ++indegree[j];
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int j = 0; j < count; ++j) {
    if (indegree[j] == 0) ready.push(j);
  }
  std::vector<int> order;
  order.reserve(count);
  while (!ready.empty()) {
    int j = ready.top();
    ready.pop();
    order.push_back(j);
    if (j + 1 < count && before[j] == 1 && --indegree[j + 1] == 0) ready.push(j + 1);
    if (j > 0 && before[j - 1] == -1 && --indegree[j - 1] == 0) ready.push(j - 1);
  }
  return order;
}

std::vector<Move> token_path(const CanonicalOrder& order, Vertex from, Vertex to) {
  std::vector<Move> path;
  int cur = order.position_of[from];
  const int target = order.position_of[to];
  while (cur != target) {
    int next;
    if (target > cur) {
      next = target <= order.hi[cur] ? target : order.hi[cur];
    } else {
      next = target >= order.lo[cur] ? target : order.lo[cur];
    }
    if (next == cur) throw std::logic_error("token_path: target unreachable");
    path.push_back({order.vertex_at[cur], order.vertex_at[next]});
    cur = next;
  }
  return path;
}

namespace {

struct Plan {
  std::vector<int> blue_pos;
  std::vector<int> red_pos;
  std::vector<TokenStep> steps;
};

Plan plan_tokens(const CanonicalOrder& order, const IndependentSet& blue, const IndependentSet& red) {
  ColoredString s = build_string(order, blue, red);
  std::vector<int> h = compute_heights(s);
  std::vector<Block> blocks = partition_blocks(s, h);
  Plan plan;
  plan.blue_pos = sorted_positions(order, blue);
  plan.red_pos = sorted_positions(order, red);
  auto dir = [&](int t) {
    if (plan.blue_pos[t] < plan.red_pos[t]) return Direction::R;
    if (plan.blue_pos[t] > plan.red_pos[t]) return Direction::L;
    return Direction::C;
  };
  for (int j : block_order(blocks, s)) {
    const Block& b = blocks[j];
    if (b.starts_with == Color::Blue) {
      for (int t = b.last_token - 1; t >= b.first_token; --t) plan.steps.push_back({t, dir(t)});
    } else {
      for (int t = b.first_token; t < b.last_token; ++t) plan.steps.push_back({t, dir(t)});
    }
  }
  return plan;
}

}  // namespace

std::vector<TokenStep> token_ordering(const CanonicalOrder& order, const IndependentSet& blue,
                                      const IndependentSet& red) {
  return plan_tokens(order, blue, red).steps;
}

ReconfigSequence solve_proper(const IntervalRepresentation& rep, const IndependentSet& blue,
                              const IndependentSet& red) {
  CanonicalOrder order = canonical_order(rep);
  if (auto twins = strong_twins(order); !twins.empty()) {
    throw SolverError("STRONG_TWINS", "input has vertices with equal closed neighbourhoods", twins);
  }
  for (const IndependentSet* set : {&blue, &red}) {
    if (!independent_in(rep, *set)) throw SolverError("NOT_INDEPENDENT", "token set is not independent");
  }
  Plan plan = plan_tokens(order, blue, red);
  ReconfigSequence seq;
  seq.initial = blue;
  for (const TokenStep& step : plan.steps) {
    if (step.direction == Direction::C) continue;
    auto path = token_path(order, order.vertex_at[plan.blue_pos[step.token]],
                           order.vertex_at[plan.red_pos[step.token]]);
    seq.moves.insert(seq.moves.end(), path.begin(), path.end());
  }
  return seq;
}

}  // namespace slidetok::proper
