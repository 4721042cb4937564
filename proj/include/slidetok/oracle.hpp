#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slidetok/graph.hpp"

namespace slidetok::oracle {

// Sorted vertex ids packed into bytes; equal keys iff equal sets.
class StateKey {
 public:
  StateKey() = default;
  explicit StateKey(const std::vector<Vertex>& sorted_vertices);
  explicit StateKey(const IndependentSet& set) : StateKey(set.vertices()) {}

  std::vector<Vertex> vertices() const;
  const std::string& bytes() const { return bytes_; }

  bool operator==(const StateKey&) const = default;
  bool operator<(const StateKey& o) const { return bytes_ < o.bytes_; }

 private:
  std::string bytes_;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const { return std::hash<std::string>{}(k.bytes()); }
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class Status { Reachable, Unreachable, CapExceeded };
const char* to_string(Status s);

struct OracleResult {
  Status status = Status::Unreachable;
  std::optional<int> distance;
  std::optional<ReconfigSequence> sequence;
  std::uint64_t states_explored = 0;

  bool reachable() const { return status == Status::Reachable; }
};

// Successors in order of (from, to).
std::vector<std::pair<Move, IndependentSet>> neighbors(const Graph& g, const IndependentSet& s);
bool is_stuck(const Graph& g, const IndependentSet& s);

// Throws std::invalid_argument on cardinality or independence violations.
OracleResult bfs(const Graph& g, const IndependentSet& blue, const IndependentSet& red,
                 std::uint64_t budget = kDefaultBudget);

// Distances from `source` to every reachable independent set of the same size.
// Returns std::nullopt when more than `budget` states are discovered.
std::optional<std::unordered_map<StateKey, int, StateKeyHash>> distances_from(
    const Graph& g, const IndependentSet& source, std::uint64_t budget = kDefaultBudget);

namespace detail {

// Token-labelled search: token i starts on start[i] and must end on target[i].
// Used to test whether a particular target assignment is realisable.
// Returns std::nullopt when unreachable; throws std::runtime_error past the budget.
std::optional<int> labeled_distance(const Graph& g, const std::vector<Vertex>& start,
                                    const std::vector<Vertex>& target, std::uint64_t budget = kDefaultBudget);

}  // namespace detail

}  // namespace slidetok::oracle
