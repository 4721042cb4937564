#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slidetok/graph.hpp"

namespace slidetok {

// Input text error. `line` is 0 for errors inside a bare endpoint string;
// `column` is the 1-based token position on that line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

enum class Side { Left, Right };

struct Endpoint {
  Vertex vertex = 0;
  Side side = Side::Left;
  bool operator==(const Endpoint&) const = default;
};

// Endpoint-event string of an interval graph. Ranks run 1..2n by position.
class IntervalRepresentation {
 public:
  IntervalRepresentation() = default;
  // Validates the event list; throws ParseError whose column is the 1-based event index.
  explicit IntervalRepresentation(std::vector<Endpoint> events);

  int n() const { return n_; }
  const std::vector<Endpoint>& events() const { return events_; }
  int left(Vertex v) const { return left_[v]; }
  int right(Vertex v) const { return right_[v]; }

  // Closed-interval intersection; touching endpoints cannot occur with distinct ranks.
  bool intersects(Vertex u, Vertex v) const {
    return left_[u] < right_[v] && left_[v] < right_[u];
  }
  bool contains(Vertex outer, Vertex inner) const {
    return left_[outer] < left_[inner] && right_[inner] < right_[outer];
  }

 private:
  int n_ = 0;
  std::vector<Endpoint> events_;
  std::vector<int> left_{0};
  std::vector<int> right_{0};
};

IntervalRepresentation parse_interval_representation(std::string_view text);
std::string serialize(const IntervalRepresentation& rep);

Graph intersection_graph(const IntervalRepresentation& rep);
bool is_connected(const IntervalRepresentation& rep);

enum class GraphClass { Proper, TriviallyPerfect, Neither };
const char* to_string(GraphClass c);
GraphClass classify(const IntervalRepresentation& rep);

// One connected component, relabelled 1..n' in order of LEFT rank.
struct RepComponent {
  IntervalRepresentation rep;
  std::vector<Vertex> to_global;  // local id -> original id, index 0 unused
};
std::vector<RepComponent> split_components(const IntervalRepresentation& rep);

// True when no two of `vertices` have intersecting intervals.
bool independent_in(const IntervalRepresentation& rep, const IndependentSet& set);

}  // namespace slidetok
