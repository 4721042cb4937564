#include "slidetok/instance.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace slidetok {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of("\n|", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

int to_int(const Line& line, std::size_t col) {
  if (col >= line.tokens.size()) {
    throw ParseError("missing integer", line.number, static_cast<int>(col) + 1);
  }
  std::string_view t = line.tokens[col];
  int value = 0;
  auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || end != t.data() + t.size()) {
    throw ParseError("expected an integer, found '" + std::string(t) + "'", line.number, static_cast<int>(col) + 1);
  }
  return value;
}

void expect_tokens(const Line& line, std::size_t count) {
  if (line.tokens.size() > count) {
    throw ParseError("unexpected token '" + std::string(line.tokens[count]) + "'", line.number,
                     static_cast<int>(count) + 1);
  }
  if (line.tokens.size() < count) throw ParseError("missing value", line.number, static_cast<int>(line.tokens.size()) + 1);
}

}  // namespace

Graph Instance::graph() const {
  if (rep) return intersection_graph(*rep);
  return Graph(n, edges);
}

Instance parse_instance(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  Instance inst;
  bool have_n = false, have_blue = false, have_red = false, have_edges = false;
  int n_line = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const Line& line = lines[li];
    std::string_view key = line.tokens[0];
    if (key == "n") {
      expect_tokens(line, 2);
      inst.n = to_int(line, 1);
      if (inst.n < 0) throw ParseError("vertex count must be non-negative", line.number, 2);
      have_n = true;
      n_line = line.number;
    } else if (key == "rep") {
      if (inst.rep || have_edges) throw ParseError("graph given twice", line.number, 1);
      std::string body;
      for (std::size_t c = 1; c < line.tokens.size(); ++c) {
        body += line.tokens[c];
        body += ' ';
      }
      try {
        inst.rep = parse_interval_representation(body);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), line.number, e.column() + 1);
      }
    } else if (key == "edges") {
      if (inst.rep || have_edges) throw ParseError("graph given twice", line.number, 1);
      expect_tokens(line, 2);
      int m = to_int(line, 1);
      if (m < 0) throw ParseError("edge count must be non-negative", line.number, 2);
      have_edges = true;
      for (int e = 0; e < m; ++e) {
        if (++li >= lines.size()) throw ParseError("expected " + std::to_string(m) + " edge lines", line.number, 2);
        const Line& el = lines[li];
        expect_tokens(el, 2);
        inst.edges.emplace_back(to_int(el, 0), to_int(el, 1));
      }
    } else if (key == "blue" || key == "red") {
      bool is_blue = key == "blue";
      if (is_blue ? have_blue : have_red) throw ParseError(std::string(key) + " given twice", line.number, 1);
      std::vector<Vertex> ids;
      for (std::size_t c = 1; c < line.tokens.size(); ++c) ids.push_back(to_int(line, c));
      try {
        (is_blue ? inst.blue : inst.red) = IndependentSet(ids);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line.number, 1);
      }
      (is_blue ? have_blue : have_red) = true;
    } else {
      throw ParseError("unknown keyword '" + std::string(key) + "'", line.number, 1);
    }
  }
  const int last = lines.empty() ? 1 : lines.back().number;
  if (!have_n) throw ParseError("missing 'n' line", last, 1);
  if (!inst.rep && !have_edges) throw ParseError("missing 'rep' or 'edges' line", last, 1);
  if (!have_blue) throw ParseError("missing 'blue' line", last, 1);
  if (!have_red) throw ParseError("missing 'red' line", last, 1);
  if (inst.rep && inst.rep->n() != inst.n) {
    throw ParseError("representation has " + std::to_string(inst.rep->n()) + " vertices but n is " +
                         std::to_string(inst.n),
                     n_line, 2);
  }
  for (const auto& [u, v] : inst.edges) {
    if (u < 1 || v < 1 || u > inst.n || v > inst.n || u == v) {
      throw ParseError("bad edge " + std::to_string(u) + " " + std::to_string(v), last, 1);
    }
  }
  for (const IndependentSet* set : {&inst.blue, &inst.red}) {
    for (Vertex v : *set) {
      if (v < 1 || v > inst.n) throw ParseError("token on vertex " + std::to_string(v) + " outside 1..n", last, 1);
    }
  }
  return inst;
}

namespace {

void append_set(std::string& out, const char* key, const IndependentSet& set) {
  out += key;
  for (Vertex v : set) out += ' ' + std::to_string(v);
}

std::vector<std::string> instance_lines(const Instance& inst) {
  std::vector<std::string> lines;
  lines.push_back("n " + std::to_string(inst.n));
  if (inst.rep) {
    lines.push_back("rep " + serialize(*inst.rep));
  } else {
    lines.push_back("edges " + std::to_string(inst.edges.size()));
    for (auto [u, v] : inst.edges) lines.push_back(std::to_string(u) + " " + std::to_string(v));
  }
  std::string b, r;
  append_set(b, "blue", inst.blue);
  append_set(r, "red", inst.red);
  lines.push_back(b);
  lines.push_back(r);
  return lines;
}

}  // namespace

std::string format_instance(const Instance& inst) {
  std::string out;
  for (const auto& l : instance_lines(inst)) out += l + "\n";
  return out;
}

std::string format_instance_inline(const Instance& inst) {
  std::string out;
  for (const auto& l : instance_lines(inst)) {
    if (!out.empty()) out += " | ";
    out += l;
  }
  return out;
}

std::vector<Move> parse_moves(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  std::size_t li = 0;
  if (li < lines.size() && lines[li].tokens.size() == 1 && lines[li].tokens[0] == "YES") ++li;
  if (li >= lines.size() || lines[li].tokens[0] != "MOVES") {
    throw ParseError("expected 'MOVES <count>'", li < lines.size() ? lines[li].number : 1, 1);
  }
  expect_tokens(lines[li], 2);
  int count = to_int(lines[li], 1);
  const int header = lines[li].number;
  ++li;
  std::vector<Move> moves;
  for (; li < lines.size(); ++li) {
    expect_tokens(lines[li], 2);
    moves.push_back({to_int(lines[li], 0), to_int(lines[li], 1)});
  }
  if (static_cast<int>(moves.size()) != count) {
    throw ParseError("header announces " + std::to_string(count) + " moves but " + std::to_string(moves.size()) +
                         " follow",
                     header, 2);
  }
  return moves;
}

std::string format_moves(const std::vector<Move>& moves) {
  std::ostringstream out;
  out << "MOVES " << moves.size() << "\n";
  for (const Move& m : moves) out << m.from << " " << m.to << "\n";
  return out.str();
}

}  // namespace slidetok
