#include "slidetok/solve.hpp"

#include <algorithm>
#include <optional>

#include "slidetok/caterpillar.hpp"
#include "slidetok/caterpillar_structure.hpp"
#include "slidetok/proper_interval.hpp"
#include "slidetok/trivially_perfect.hpp"

namespace slidetok {

ClassSelector parse_selector(const std::string& name) {
  if (name == "auto") return ClassSelector::Auto;
  if (name == "proper") return ClassSelector::Proper;
  if (name == "tp") return ClassSelector::TriviallyPerfect;
  if (name == "caterpillar") return ClassSelector::Caterpillar;
  throw std::invalid_argument("unknown class '" + name + "' (expected auto, proper, tp or caterpillar)");
}

const char* to_string(ClassSelector s) {
  switch (s) {
    case ClassSelector::Auto: return "auto";
    case ClassSelector::Proper: return "proper";
    case ClassSelector::TriviallyPerfect: return "tp";
    case ClassSelector::Caterpillar: return "caterpillar";
  }
  return "?";
}

namespace {

// Shared by select_solver and solve_instance. The graph is built only when the
// representation does not settle the class, and is handed back for reuse.
ClassSelector select(const Instance& inst, ClassSelector requested, std::optional<Graph>& graph) {
  if (requested != ClassSelector::Auto) {
    if (requested != ClassSelector::Caterpillar && !inst.rep) {
      throw SolverError("UNSUPPORTED_CLASS", std::string(to_string(requested)) + " needs a 'rep' line");
    }
    return requested;
  }
  if (inst.rep) {
    switch (classify(*inst.rep)) {
      case GraphClass::Proper: return ClassSelector::Proper;
      case GraphClass::TriviallyPerfect: return ClassSelector::TriviallyPerfect;
      case GraphClass::Neither: break;
    }
  }
  graph = inst.graph();
  if (is_caterpillar_forest(*graph)) return ClassSelector::Caterpillar;
  throw SolverError("UNSUPPORTED_CLASS", "input is neither proper interval, trivially perfect nor a caterpillar");
}

}  // namespace

ClassSelector select_solver(const Instance& inst, ClassSelector requested) {
  std::optional<Graph> graph;
  return select(inst, requested, graph);
}

namespace {

SolveResult solve_proper_components(const IntervalRepresentation& rep, const IndependentSet& blue,
                                    const IndependentSet& red, bool decide_only) {
  if (classify(rep) != GraphClass::Proper) throw SolverError("NOT_PROPER", "some interval contains another");
  for (const IndependentSet* set : {&blue, &red}) {
    if (!independent_in(rep, *set)) throw SolverError("NOT_INDEPENDENT", "token set is not independent");
  }
  if (blue.k() != red.k()) return SolveResult::no("CARDINALITY_MISMATCH", {});

  std::vector<RepComponent> comps = split_components(rep);
  std::vector<int> comp_of(rep.n() + 1, 0);
  std::vector<Vertex> local(rep.n() + 1, 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v = 1; v < static_cast<Vertex>(comps[c].to_global.size()); ++v) {
      comp_of[comps[c].to_global[v]] = static_cast<int>(c);
      local[comps[c].to_global[v]] = v;
    }
  }
  std::vector<std::vector<Vertex>> cb(comps.size()), cr(comps.size());
  for (Vertex v : blue) cb[comp_of[v]].push_back(local[v]);
  for (Vertex v : red) cr[comp_of[v]].push_back(local[v]);

  std::vector<Edge> twins;
  for (const auto& comp : comps) {
    for (auto [a, b] : proper::strong_twins(proper::canonical_order(comp.rep))) {
      Vertex x = comp.to_global[a], y = comp.to_global[b];
      twins.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  if (!twins.empty()) {
    std::sort(twins.begin(), twins.end());
    throw SolverError("STRONG_TWINS", "input has vertices with equal closed neighbourhoods", twins);
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (cb[c].size() != cr[c].size()) {
      return SolveResult::no("COMPONENT_UNBALANCED",
                             std::vector<Vertex>(comps[c].to_global.begin() + 1, comps[c].to_global.end()));
    }
  }
  SolveResult res;
  res.yes = true;
  res.sequence.initial = blue;
  if (decide_only) return res;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (cb[c].empty()) continue;
    ReconfigSequence part = proper::solve_proper(comps[c].rep, IndependentSet(cb[c]), IndependentSet(cr[c]));
    for (const Move& mv : part.moves) {
      res.sequence.moves.push_back({comps[c].to_global[mv.from], comps[c].to_global[mv.to]});
    }
  }
  return res;
}

}  // namespace

SolveResult solve_instance(const Instance& inst, const SolveOptions& options) {
  std::optional<Graph> graph;
  switch (select(inst, options.selector, graph)) {
    case ClassSelector::Proper:
      return solve_proper_components(*inst.rep, inst.blue, inst.red, options.decide_only);
    case ClassSelector::TriviallyPerfect:
      return tp::solve_tp(*inst.rep, inst.blue, inst.red, options.decide_only);
    case ClassSelector::Caterpillar: {
      // Auto selection has already built the graph and checked its shape.
      if (!graph) {
        graph = inst.graph();
        if (!is_caterpillar_forest(*graph)) {
          // Report the specific structural failure of the first offending component.
          if (graph->connected()) recognize_caterpillar(*graph);
          throw SolverError("NOT_CATERPILLAR", "some component is not a caterpillar");
        }
      }
      return cat::solve_caterpillar(*graph, inst.blue, inst.red, options.decide_only);
    }
    case ClassSelector::Auto: break;
  }
  throw std::logic_error("solver selection returned auto");
}

}  // namespace slidetok
