// Python bindings: instances are passed as text in the instance file format.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slidetok/caterpillar_structure.hpp"
#include "slidetok/crosscheck.hpp"
#include "slidetok/generator.hpp"
#include "slidetok/instance.hpp"
#include "slidetok/oracle.hpp"
#include "slidetok/solve.hpp"

namespace py = pybind11;
using namespace slidetok;

namespace {

using MoveList = std::vector<std::pair<Vertex, Vertex>>;

MoveList to_pairs(const std::vector<Move>& moves) {
  MoveList out;
  out.reserve(moves.size());
  for (const Move& m : moves) out.emplace_back(m.from, m.to);
  return out;
}

py::dict solve(const std::string& text, const std::string& cls, bool decide_only) {
  SolveResult r = solve_instance(parse_instance(text), {parse_selector(cls), decide_only});
  py::dict d;
  d["yes"] = r.yes;
  d["moves"] = to_pairs(r.sequence.moves);
  d["reason"] = r.witness.reason;
  d["witness"] = r.witness.vertices;
  return d;
}

py::dict run_oracle(const std::string& text, std::uint64_t budget) {
  Instance inst = parse_instance(text);
  oracle::OracleResult r = oracle::bfs(inst.graph(), inst.blue, inst.red, budget);
  py::dict d;
  d["status"] = oracle::to_string(r.status);
  d["distance"] = r.distance ? py::cast(*r.distance) : py::none();
  d["moves"] = r.sequence ? py::cast(to_pairs(r.sequence->moves)) : py::none();
  d["states"] = r.states_explored;
  return d;
}

py::dict validate(const std::string& text, const MoveList& moves) {
  Instance inst = parse_instance(text);
  ReconfigSequence seq{inst.blue, {}};
  for (auto [u, v] : moves) seq.moves.push_back({u, v});
  Validation v = validate_sequence(inst.graph(), inst.blue, inst.red, seq);
  py::dict d;
  d["ok"] = v.ok;
  d["step"] = v.step;
  d["reason"] = v.reason;
  return d;
}

py::dict run_crosscheck(const std::string& cls, int max_n, int max_k, bool exhaustive, int count,
                        std::uint64_t seed, int jobs) {
  CrosscheckOptions options;
  options.cls = parse_instance_class(cls);
  options.max_n = max_n;
  options.max_k = max_k;
  options.exhaustive = exhaustive;
  options.count = count;
  options.seed = seed;
  options.jobs = jobs;
  CrosscheckReport r;
  {
    py::gil_scoped_release release;
    r = crosscheck(options);
  }
  py::dict d;
  d["checked"] = r.checked;
  d["yes"] = r.yes;
  d["mismatches"] = r.mismatches.size();
  d["report"] = r.format();
  return d;
}

}  // namespace

PYBIND11_MODULE(_slidetok, m) {
  m.doc() = "Shortest sliding-token reconfiguration solvers and a BFS oracle";

  static py::exception<SolverError> solver_error(m, "SolverError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SolverError& e) {
      solver_error((e.code() + ": " + e.what()).c_str());
    } catch (const ParseError& e) {
      parse_error(e.what());
    }
  });

  m.def(
      "classify", [](const std::string& rep) { return to_string(classify(parse_interval_representation(rep))); },
      py::arg("rep"), "Classify an endpoint string as proper, tp or neither");
  m.def("solve", &solve, py::arg("instance"), py::arg("cls") = "auto", py::arg("decide_only") = false,
        "Solve an instance; returns yes, moves, reason and witness");
  m.def("oracle", &run_oracle, py::arg("instance"), py::arg("budget") = oracle::kDefaultBudget,
        "Breadth-first search over the reconfiguration graph");
  m.def("validate", &validate, py::arg("instance"), py::arg("moves"), "Check a move list against an instance");
  m.def(
      "generate",
      [](const std::string& cls, int n, int k, std::uint64_t seed) {
        return format_instance(gen_instance(parse_instance_class(cls), n, k, seed));
      },
      py::arg("cls"), py::arg("n"), py::arg("k"), py::arg("seed") = 0, "Random instance in the file format");
  m.def("crosscheck", &run_crosscheck, py::arg("cls"), py::arg("max_n") = 6, py::arg("max_k") = 2,
        py::arg("exhaustive") = true, py::arg("count") = 100, py::arg("seed") = 0, py::arg("jobs") = 1,
        "Compare the solver for a class with the oracle");
  m.def(
      "find_strong_twins", [](int n, const std::vector<Edge>& edges) { return find_strong_twins(Graph(n, edges)); },
      py::arg("n"), py::arg("edges"));
  m.def(
      "recognize_caterpillar",
      [](int n, const std::vector<Edge>& edges) {
        CaterpillarStructure c = recognize_caterpillar(Graph(n, edges));
        py::dict d;
        d["spine"] = c.spine;
        d["leaves"] = c.leaves;
        return d;
      },
      py::arg("n"), py::arg("edges"));
}
