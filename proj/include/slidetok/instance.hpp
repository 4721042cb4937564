#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slidetok/graph.hpp"
#include "slidetok/interval.hpp"

namespace slidetok {

// A problem instance as read from an instance file. Exactly one of `rep` and
// `edges` describes the graph.
struct Instance {
  int n = 0;
  std::optional<IntervalRepresentation> rep;
  std::vector<Edge> edges;
  IndependentSet blue;
  IndependentSet red;

  // Builds the graph; for `rep` this is the intersection graph.
  Graph graph() const;
};

// Lines are separated by newlines or by '|' so a whole instance fits on one line.
// Throws ParseError carrying the 1-based line and token position.
Instance parse_instance(std::string_view text);

std::string format_instance(const Instance& inst);
// Same content on a single line with " | " between lines.
std::string format_instance_inline(const Instance& inst);

// Accepts an optional leading YES line so solver output can be fed back directly.
std::vector<Move> parse_moves(std::string_view text);
std::string format_moves(const std::vector<Move>& moves);

}  // namespace slidetok
