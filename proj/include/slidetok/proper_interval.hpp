#pragma once

#include <vector>

#include "slidetok/graph.hpp"
#include "slidetok/interval.hpp"

namespace slidetok::proper {

enum class Color { Blue, Red };

// Vertices sorted by LEFT rank, with the neighbourhood of each position as a
// contiguous range of positions. Positions are 1-based.
struct CanonicalOrder {
  std::vector<Vertex> vertex_at;  // position -> vertex id, index 0 unused
  std::vector<int> position_of;   // vertex id -> position
  std::vector<int> lo;            // position -> smallest adjacent position (itself included)
  std::vector<int> hi;            // position -> largest adjacent position (itself included)

  int n() const { return static_cast<int>(vertex_at.size()) - 1; }
};

// Throws SolverError NOT_PROPER or DISCONNECTED. Keeps the input orientation.
CanonicalOrder canonical_order(const IntervalRepresentation& rep);

// Pairs of consecutive positions with equal closed neighbourhoods, as vertex ids.
std::vector<Edge> strong_twins(const CanonicalOrder& order);

struct ColoredEntry {
  Vertex vertex = 0;
  Color color = Color::Blue;
  bool operator==(const ColoredEntry&) const = default;
};
using ColoredString = std::vector<ColoredEntry>;

// Entries sorted by LEFT rank; a shared vertex gives BLUE then RED.
// Throws SolverError CARDINALITY_MISMATCH when |blue| != |red|.
ColoredString build_string(const CanonicalOrder& order, const IndependentSet& blue, const IndependentSet& red);

std::vector<int> compute_heights(const ColoredString& s);

struct Block {
  int begin = 0;  // 0-based entry index, inclusive
  int end = 0;    // exclusive
  Color starts_with = Color::Blue;
  int first_token = 0;  // 0-based token index p
  int last_token = 0;   // exclusive, q
};

std::vector<Block> partition_blocks(const ColoredString& s, const std::vector<int>& h);

// Indices into `blocks` in processing order.
std::vector<int> block_order(const std::vector<Block>& blocks, const ColoredString& s);

// Greedy shortest route; empty when from == to.
std::vector<Move> token_path(const CanonicalOrder& order, Vertex from, Vertex to);

// One entry per token in the order tokens are slid.
struct TokenStep {
  int token = 0;  // 0-based index of the token in left-to-right order
  Direction direction = Direction::C;
};
std::vector<TokenStep> token_ordering(const CanonicalOrder& order, const IndependentSet& blue,
                                      const IndependentSet& red);

// Connected, twin-free proper interval input; throws SolverError otherwise.
ReconfigSequence solve_proper(const IntervalRepresentation& rep, const IndependentSet& blue,
                              const IndependentSet& red);

}  // namespace slidetok::proper
