#include "slidetok/interval.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace slidetok {

namespace {

std::string where(int line, int column) {
  std::string s;
  if (line > 0) s += "line " + std::to_string(line) + ", ";
  s += "token " + std::to_string(column);
  return s;
}

const char* side_name(Side s) { return s == Side::Left ? "LEFT" : "RIGHT"; }

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(where(line, column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

IntervalRepresentation::IntervalRepresentation(std::vector<Endpoint> events) : events_(std::move(events)) {
  int max_id = 0;
  for (const auto& e : events_) max_id = std::max(max_id, e.vertex);
  std::vector<int> lpos(max_id + 1, 0), rpos(max_id + 1, 0);
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const Endpoint& e = events_[i];
    int pos = static_cast<int>(i) + 1;
    if (e.vertex < 1) throw ParseError("vertex ids start at 1", 0, pos);
    auto& slot = e.side == Side::Left ? lpos[e.vertex] : rpos[e.vertex];
    if (slot != 0) {
      throw ParseError(std::string("duplicate ") + side_name(e.side) + " endpoint for vertex " +
                           std::to_string(e.vertex),
                       0, pos);
    }
    if (e.side == Side::Right && lpos[e.vertex] == 0) {
      throw ParseError("RIGHT endpoint of vertex " + std::to_string(e.vertex) + " before its LEFT endpoint", 0,
                       pos);
    }
    slot = pos;
  }
  int distinct = 0;
  for (int v = 1; v <= max_id; ++v) distinct += lpos[v] != 0;
  if (distinct != max_id) {
    for (std::size_t i = 0; i < events_.size(); ++i) {
      if (events_[i].vertex > distinct) {
        throw ParseError("vertex ids are not contiguous: " + std::to_string(events_[i].vertex) +
                             " used but only " + std::to_string(distinct) + " distinct ids present",
                         0, static_cast<int>(i) + 1);
      }
    }
  }
  for (int v = 1; v <= max_id; ++v) {
    if (rpos[v] == 0) {
      throw ParseError("missing RIGHT endpoint for vertex " + std::to_string(v), 0, lpos[v]);
    }
  }
  n_ = max_id;
  left_ = std::move(lpos);
  right_ = std::move(rpos);
}

IntervalRepresentation parse_interval_representation(std::string_view text) {
  std::vector<Endpoint> events;
  std::size_t i = 0;
  int pos = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    ++pos;
    Endpoint e;
    bool ok = tok.size() >= 2 && (tok[0] == 'L' || tok[0] == 'R') && tok[1] != '0';
    if (ok) {
      e.side = tok[0] == 'L' ? Side::Left : Side::Right;
      auto [end, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), e.vertex);
      ok = ec == std::errc() && end == tok.data() + tok.size();
    }
    if (!ok) throw ParseError("malformed endpoint '" + std::string(tok) + "', expected L<id> or R<id>", 0, pos);
    events.push_back(e);
    i = j;
  }
  return IntervalRepresentation(std::move(events));
}

std::string serialize(const IntervalRepresentation& rep) {
  std::string out;
  for (const auto& e : rep.events()) {
    if (!out.empty()) out += ' ';
    out += e.side == Side::Left ? 'L' : 'R';
    out += std::to_string(e.vertex);
  }
  return out;
}

Graph intersection_graph(const IntervalRepresentation& rep) {
  std::vector<Edge> edges;
  std::vector<Vertex> active;
  std::vector<int> slot(rep.n() + 1, -1);
  for (const auto& e : rep.events()) {
    if (e.side == Side::Left) {
      for (Vertex u : active) edges.emplace_back(std::min(u, e.vertex), std::max(u, e.vertex));
      slot[e.vertex] = static_cast<int>(active.size());
      active.push_back(e.vertex);
    } else {
      int s = slot[e.vertex];
      active[s] = active.back();
      slot[active[s]] = s;
      active.pop_back();
    }
  }
  return Graph(rep.n(), edges);
}

bool is_connected(const IntervalRepresentation& rep) {
  int open = 0;
  const auto& ev = rep.events();
  for (std::size_t i = 0; i < ev.size(); ++i) {
    open += ev[i].side == Side::Left ? 1 : -1;
    if (open == 0 && i + 1 < ev.size()) return false;
  }
  return true;
}

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Proper: return "PROPER";
    case GraphClass::TriviallyPerfect: return "TRIVIALLY_PERFECT";
    case GraphClass::Neither: return "NEITHER";
  }
  return "?";
}

GraphClass classify(const IntervalRepresentation& rep) {
  std::vector<Vertex> by_left, by_right;
  for (const auto& e : rep.events()) (e.side == Side::Left ? by_left : by_right).push_back(e.vertex);
  if (by_left == by_right) return GraphClass::Proper;
  // Nested or disjoint everywhere iff the events form a balanced parenthesisation.
  std::vector<Vertex> stack;
  for (const auto& e : rep.events()) {
    if (e.side == Side::Left) {
      stack.push_back(e.vertex);
    } else {
      if (stack.back() != e.vertex) return GraphClass::Neither;
      stack.pop_back();
    }
  }
  return GraphClass::TriviallyPerfect;
}

std::vector<RepComponent> split_components(const IntervalRepresentation& rep) {
  std::vector<RepComponent> out;
  std::vector<Vertex> local(rep.n() + 1, 0);
  std::vector<Endpoint> events;
  std::vector<Vertex> to_global{0};
  int open = 0;
  for (const auto& e : rep.events()) {
    if (e.side == Side::Left) {
      to_global.push_back(e.vertex);
      local[e.vertex] = static_cast<Vertex>(to_global.size()) - 1;
      ++open;
    } else {
      --open;
    }
    events.push_back({local[e.vertex], e.side});
    if (open == 0) {
      out.push_back({IntervalRepresentation(std::move(events)), std::move(to_global)});
      events.clear();
      to_global.assign(1, 0);
    }
  }
  return out;
}

bool independent_in(const IntervalRepresentation& rep, const IndependentSet& set) {
  std::vector<Vertex> vs = set.vertices();
  for (Vertex v : vs) {
    if (v < 1 || v > rep.n()) return false;
  }
  std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return rep.left(a) < rep.left(b); });
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (rep.right(vs[i - 1]) > rep.left(vs[i])) return false;
  }
  return true;
}

}  // namespace slidetok
