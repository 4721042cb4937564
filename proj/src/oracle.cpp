#include "slidetok/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace slidetok::oracle {

StateKey::StateKey(const std::vector<Vertex>& sorted_vertices) {
  bytes_.resize(sorted_vertices.size() * sizeof(Vertex));
  if (!sorted_vertices.empty()) std::memcpy(bytes_.data(), sorted_vertices.data(), bytes_.size());
}

std::vector<Vertex> StateKey::vertices() const {
  std::vector<Vertex> out(bytes_.size() / sizeof(Vertex));
  if (!out.empty()) std::memcpy(out.data(), bytes_.data(), bytes_.size());
  return out;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Reachable: return "REACHABLE";
    case Status::Unreachable: return "UNREACHABLE";
    case Status::CapExceeded: return "CAP_EXCEEDED";
  }
  return "?";
}

namespace {

// Calls fn(from_index, to) for every legal slide out of `state`; `occ` must mark the state.
template <class Fn>
void for_each_slide(const Graph& g, const std::vector<Vertex>& state, const std::vector<char>& occ, Fn&& fn) {
  for (std::size_t i = 0; i < state.size(); ++i) {
    const Vertex u = state[i];
    for (Vertex v : g.neighbors(u)) {
      if (occ[v]) continue;
      bool free = true;
      for (Vertex w : g.neighbors(v)) {
        if (w != u && occ[w]) {
          free = false;
          break;
        }
      }
      if (free) fn(i, v);
    }
  }
}

std::vector<Vertex> slide(const std::vector<Vertex>& state, std::size_t i, Vertex to) {
  std::vector<Vertex> next = state;
  next[i] = to;
  std::sort(next.begin(), next.end());
  return next;
}

void check_input(const Graph& g, const IndependentSet& blue, const IndependentSet& red) {
  if (blue.k() != red.k()) throw std::invalid_argument("blue and red differ in size");
  if (!blue.independent_in(g)) throw std::invalid_argument("blue is not an independent set");
  if (!red.independent_in(g)) throw std::invalid_argument("red is not an independent set");
}

struct Search {
  std::vector<StateKey> keys;
  std::vector<int> parent;
  std::vector<Move> via;
  std::unordered_map<StateKey, int, StateKeyHash> index;
};

}  // namespace

std::vector<std::pair<Move, IndependentSet>> neighbors(const Graph& g, const IndependentSet& s) {
  std::vector<char> occ(g.n() + 1, 0);
  for (Vertex v : s) occ[v] = 1;
  std::vector<std::pair<Move, IndependentSet>> out;
  const auto& state = s.vertices();
  for_each_slide(g, state, occ, [&](std::size_t i, Vertex to) {
    out.emplace_back(Move{state[i], to}, IndependentSet(slide(state, i, to)));
  });
  return out;
}

bool is_stuck(const Graph& g, const IndependentSet& s) {
  std::vector<char> occ(g.n() + 1, 0);
  for (Vertex v : s) occ[v] = 1;
  bool any = false;
  for_each_slide(g, s.vertices(), occ, [&](std::size_t, Vertex) { any = true; });
  return !any;
}

OracleResult bfs(const Graph& g, const IndependentSet& blue, const IndependentSet& red, std::uint64_t budget) {
  check_input(g, blue, red);
  OracleResult res;
  const StateKey goal(red);
  Search s;
  s.keys.push_back(StateKey(blue));
  s.parent.push_back(-1);
  s.via.push_back({});
  s.index.emplace(s.keys[0], 0);
  std::vector<char> occ(g.n() + 1, 0);
  int found = blue == red ? 0 : -1;
  for (std::size_t head = 0; head < s.keys.size() && found < 0; ++head) {
    const std::vector<Vertex> state = s.keys[head].vertices();
    for (Vertex v : state) occ[v] = 1;
    for_each_slide(g, state, occ, [&](std::size_t i, Vertex to) {
      if (found >= 0) return;
      StateKey key(slide(state, i, to));
      if (s.index.count(key)) return;
      int id = static_cast<int>(s.keys.size());
      s.index.emplace(key, id);
      s.keys.push_back(key);
      s.parent.push_back(static_cast<int>(head));
      s.via.push_back({state[i], to});
      if (key == goal) found = id;
    });
    for (Vertex v : state) occ[v] = 0;
    if (found < 0 && s.keys.size() > budget) {
      res.status = Status::CapExceeded;
      res.states_explored = s.keys.size();
      return res;
    }
  }
  res.states_explored = s.keys.size();
  if (found < 0) {
    res.status = Status::Unreachable;
    return res;
  }
  ReconfigSequence seq;
  seq.initial = blue;
  for (int x = found; s.parent[x] >= 0; x = s.parent[x]) seq.moves.push_back(s.via[x]);
  std::reverse(seq.moves.begin(), seq.moves.end());
  res.status = Status::Reachable;
  res.distance = static_cast<int>(seq.moves.size());
  res.sequence = std::move(seq);
  return res;
}

std::optional<std::unordered_map<StateKey, int, StateKeyHash>> distances_from(const Graph& g,
                                                                                const IndependentSet& source,
                                                                                std::uint64_t budget) {
  if (!source.independent_in(g)) throw std::invalid_argument("source is not an independent set");
  std::unordered_map<StateKey, int, StateKeyHash> dist;
  std::vector<StateKey> queue{StateKey(source)};
  dist.emplace(queue[0], 0);
  std::vector<char> occ(g.n() + 1, 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<Vertex> state = queue[head].vertices();
    const int d = dist[queue[head]];
    for (Vertex v : state) occ[v] = 1;
    for_each_slide(g, state, occ, [&](std::size_t i, Vertex to) {
      StateKey key(slide(state, i, to));
      if (dist.emplace(key, d + 1).second) queue.push_back(std::move(key));
    });
    for (Vertex v : state) occ[v] = 0;
    if (queue.size() > budget) return std::nullopt;
  }
  return dist;
}

namespace detail {

std::optional<int> labeled_distance(const Graph& g, const std::vector<Vertex>& start,
                                    const std::vector<Vertex>& target, std::uint64_t budget) {
  if (start.size() != target.size()) throw std::invalid_argument("start and target differ in size");
  const StateKey goal(target);
  std::unordered_map<StateKey, int, StateKeyHash> dist;
  std::vector<StateKey> queue{StateKey(start)};
  dist.emplace(queue[0], 0);
  if (queue[0] == goal) return 0;
  std::vector<char> occ(g.n() + 1, 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<Vertex> state = queue[head].vertices();  // position of token i, unsorted
    const int d = dist[queue[head]];
    for (Vertex v : state) occ[v] = 1;
    std::optional<int> hit;
    for_each_slide(g, state, occ, [&](std::size_t i, Vertex to) {
      std::vector<Vertex> next = state;
      next[i] = to;
      StateKey key(next);
      if (!dist.emplace(key, d + 1).second) return;
      if (key == goal) hit = d + 1;
      queue.push_back(std::move(key));
    });
    for (Vertex v : state) occ[v] = 0;
    if (hit) return hit;
    if (queue.size() > budget) throw std::runtime_error("labeled search exceeded its state budget");
  }
  return std::nullopt;
}

}  // namespace detail

}  // namespace slidetok::oracle
