#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slidetok {

// Vertex ids are 1-based throughout; index 0 of per-vertex arrays is unused.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Raised when an input violates a solver precondition (not a NO answer).
// `code` is a stable upper-case identifier such as STRONG_TWINS or DISCONNECTED.
class SolverError : public std::runtime_error {
 public:
  SolverError(std::string code, const std::string& detail, std::vector<Edge> pairs = {});

  const std::string& code() const { return code_; }
  const std::vector<Edge>& pairs() const { return pairs_; }

 private:
  std::string code_;
  std::vector<Edge> pairs_;
};

class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on loops, parallel edges or out-of-range ids.
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  std::size_t m() const { return m_; }
  bool connected() const { return connected_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offset_[v + 1] - offset_[v]); }
  bool adjacent(Vertex u, Vertex v) const;
  bool valid(Vertex v) const { return v >= 1 && v <= n_; }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  bool connected_ = true;
  // Neighbors of v, sorted, are adj_[offset_[v] .. offset_[v + 1]).
  std::vector<std::size_t> offset_{0, 0};
  std::vector<Vertex> adj_;
};

class IndependentSet {
 public:
  IndependentSet() = default;
  // Sorts the ids; throws std::invalid_argument on duplicates.
  explicit IndependentSet(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t k() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(Vertex v) const;

  // True when every id is a vertex of g and no two are adjacent.
  bool independent_in(const Graph& g) const;

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  bool operator==(const IndependentSet&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

struct Move {
  Vertex from = 0;
  Vertex to = 0;
  bool operator==(const Move&) const = default;
};

struct ReconfigSequence {
  IndependentSet initial;
  std::vector<Move> moves;

  std::size_t length() const { return moves.size() + 1; }
};

enum class Direction { L, R, C };
char to_char(Direction d);

// Injective blue -> red map, kept as (blue, red) pairs in the order they were fixed.
struct TargetAssignment {
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

struct NoWitness {
  std::string reason;
  std::vector<Vertex> vertices;
};

struct SolveResult {
  bool yes = false;
  ReconfigSequence sequence;
  NoWitness witness;

  static SolveResult no(std::string reason, std::vector<Vertex> vertices);
};

struct Validation {
  bool ok = true;
  std::size_t step = 0;  // 1-based index of the first failing move, 0 when ok
  std::string reason;
  explicit operator bool() const { return ok; }
};

Validation validate_sequence(const Graph& g, const IndependentSet& blue, const IndependentSet& red,
                             const ReconfigSequence& seq);

// Applies moves to `start`; throws std::invalid_argument on the first illegal slide.
IndependentSet apply_moves(const Graph& g, const IndependentSet& start, const std::vector<Move>& moves);

// All unordered pairs u < v with N[u] = N[v].
std::vector<Edge> find_strong_twins(const Graph& g);

// Component id per vertex (0-based ids, index 0 unused and set to -1).
std::vector<int> component_ids(const Graph& g, int* count = nullptr);

// Single-source BFS distances, -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

}  // namespace slidetok
