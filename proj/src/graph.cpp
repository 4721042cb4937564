#include "slidetok/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace slidetok {

SolverError::SolverError(std::string code, const std::string& detail, std::vector<Edge> pairs)
    : std::runtime_error(detail.empty() ? code : code + ": " + detail),
      code_(std::move(code)),
      pairs_(std::move(pairs)) {}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  offset_.assign(n + 2, 0);
  for (auto [u, v] : edges) {
    if (!valid(u) || !valid(v)) {
      throw std::invalid_argument("edge " + std::to_string(u) + " " + std::to_string(v) +
                                  " has an id outside 1.." + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    ++offset_[u + 1];
    ++offset_[v + 1];
  }
  for (Vertex v = 1; v <= n + 1; ++v) offset_[v] += offset_[v - 1];
  adj_.resize(2 * edges.size());
  std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
  for (auto [u, v] : edges) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  for (Vertex v = 1; v <= n; ++v) {
    auto a = neighbors(v);
    auto first = adj_.begin() + offset_[v], last = adj_.begin() + offset_[v + 1];
    std::sort(first, last);
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      throw std::invalid_argument("parallel edge at vertex " + std::to_string(v));
    }
  }
  m_ = edges.size();
  int comps = 0;
  component_ids(*this, &comps);
  connected_ = comps <= 1;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!valid(u) || !valid(v)) return false;
  const bool smaller_u = degree(u) <= degree(v);
  auto a = neighbors(smaller_u ? u : v);
  Vertex other = smaller_u ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

IndependentSet::IndependentSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) {
    throw std::invalid_argument("vertex " + std::to_string(*dup) + " listed twice");
  }
}

bool IndependentSet::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool IndependentSet::independent_in(const Graph& g) const {
  for (Vertex v : vertices_) {
    if (!g.valid(v)) return false;
  }
  for (Vertex v : vertices_) {
    for (Vertex w : g.neighbors(v)) {
      if (contains(w)) return false;
    }
  }
  return true;
}

char to_char(Direction d) {
  switch (d) {
    case Direction::L: return 'L';
    case Direction::R: return 'R';
    case Direction::C: return 'C';
  }
  return '?';
}

SolveResult SolveResult::no(std::string reason, std::vector<Vertex> vertices) {
  SolveResult r;
  r.yes = false;
  r.witness.reason = std::move(reason);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  r.witness.vertices = std::move(vertices);
  return r;
}

namespace {

// Returns an empty string when the slide is legal on `occupied`.
std::string slide_error(const Graph& g, const std::vector<char>& occupied, Move mv) {
  if (!g.valid(mv.from) || !g.valid(mv.to)) return "vertex id out of range";
  if (!g.adjacent(mv.from, mv.to)) {
    return "{" + std::to_string(mv.from) + "," + std::to_string(mv.to) + "} is not an edge";
  }
  if (!occupied[mv.from]) return "vertex " + std::to_string(mv.from) + " holds no token";
  if (occupied[mv.to]) return "vertex " + std::to_string(mv.to) + " already holds a token";
  for (Vertex w : g.neighbors(mv.to)) {
    if (w != mv.from && occupied[w]) {
      return "{" + std::to_string(mv.to) + "," + std::to_string(w) + "} adjacent";
    }
  }
  return {};
}

}  // namespace

Validation validate_sequence(const Graph& g, const IndependentSet& blue, const IndependentSet& red,
                             const ReconfigSequence& seq) {
  Validation res;
  if (!(seq.initial == blue)) {
    res.ok = false;
    res.reason = "initial set differs from blue";
    return res;
  }
  std::vector<char> occupied(g.n() + 1, 0);
  for (Vertex v : blue) {
    if (!g.valid(v)) {
      res.ok = false;
      res.reason = "vertex id out of range";
      return res;
    }
    occupied[v] = 1;
  }
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    std::string err = slide_error(g, occupied, seq.moves[i]);
    if (!err.empty()) {
      res.ok = false;
      res.step = i + 1;
      res.reason = err;
      return res;
    }
    occupied[seq.moves[i].from] = 0;
    occupied[seq.moves[i].to] = 1;
  }
  std::vector<Vertex> final_set;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (occupied[v]) final_set.push_back(v);
  }
  if (final_set != red.vertices()) {
    res.ok = false;
    res.step = seq.moves.size() + 1;  // points just past the last move
    res.reason = "final set differs from red";
  }
  return res;
}

IndependentSet apply_moves(const Graph& g, const IndependentSet& start, const std::vector<Move>& moves) {
  std::vector<char> occupied(g.n() + 1, 0);
  for (Vertex v : start) occupied[v] = 1;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    std::string err = slide_error(g, occupied, moves[i]);
    if (!err.empty()) throw std::invalid_argument("move " + std::to_string(i + 1) + ": " + err);
    occupied[moves[i].from] = 0;
    occupied[moves[i].to] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (occupied[v]) out.push_back(v);
  }
  return IndependentSet(std::move(out));
}

std::vector<Edge> find_strong_twins(const Graph& g) {
  std::vector<Edge> out;
  std::vector<Vertex> nu, nv;
  for (Vertex u = 1; u <= g.n(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u || g.degree(u) != g.degree(v)) continue;
      nu.assign(g.neighbors(u).begin(), g.neighbors(u).end());
      nu.insert(std::lower_bound(nu.begin(), nu.end(), u), u);
      nv.assign(g.neighbors(v).begin(), g.neighbors(v).end());
      nv.insert(std::lower_bound(nv.begin(), nv.end(), v), v);
      if (nu == nv) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> component_ids(const Graph& g, int* count) {
  std::vector<int> comp(g.n() + 1, -1);
  int c = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= g.n(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.n() + 1, -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

}  // namespace slidetok
