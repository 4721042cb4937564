// Command-line front end for the sliding-token solvers and the BFS oracle.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "slidetok/crosscheck.hpp"
#include "slidetok/generator.hpp"
#include "slidetok/instance.hpp"
#include "slidetok/oracle.hpp"
#include "slidetok/solve.hpp"

namespace {

using namespace slidetok;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct RunConfig {
  std::string cls = "auto";
  std::string in = "-";
  std::string out = "-";
  std::string seq;
  std::uint64_t seed = 0;
  int n = 10;
  int k = 2;
  std::string count = "100";
  std::uint64_t budget = oracle::kDefaultBudget;
  int jobs = 1;
  bool decide_only = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string format_no(const NoWitness& w) {
  std::string line = "NO " + w.reason;
  for (Vertex v : w.vertices) line += " " + std::to_string(v);
  return line + "\n";
}

int cmd_solve(const RunConfig& cfg) {
  Instance inst = parse_instance(read_input(cfg.in));
  SolveOptions options;
  options.selector = parse_selector(cfg.cls);
  options.decide_only = cfg.decide_only;
  SolveResult res = solve_instance(inst, options);
  if (!res.yes) {
    write_output(cfg.out, format_no(res.witness));
    return kExitNo;
  }
  write_output(cfg.out, cfg.decide_only ? "YES\n" : "YES\n" + format_moves(res.sequence.moves));
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  Instance inst = parse_instance(read_input(cfg.in));
  ReconfigSequence seq{inst.blue, parse_moves(read_input(cfg.seq))};
  Validation v = validate_sequence(inst.graph(), inst.blue, inst.red, seq);
  if (!v) {
    write_output(cfg.out, "INVALID step " + std::to_string(v.step) + ": " + v.reason + "\n");
    return kExitNo;
  }
  write_output(cfg.out, "OK " + std::to_string(seq.moves.size()) + "\n");
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg) {
  Instance inst = parse_instance(read_input(cfg.in));
  if (inst.blue.k() != inst.red.k()) throw SolverError("CARDINALITY_MISMATCH", "blue and red differ in size");
  oracle::OracleResult r = oracle::bfs(inst.graph(), inst.blue, inst.red, cfg.budget);
  std::cerr << "STATES " << r.states_explored << "\n";
  switch (r.status) {
    case oracle::Status::Reachable:
      write_output(cfg.out, "YES\n" + format_moves(r.sequence->moves));
      return kExitOk;
    case oracle::Status::Unreachable:
      write_output(cfg.out, "NO\n");
      return kExitNo;
    case oracle::Status::CapExceeded:
      std::cerr << "error: CAP_EXCEEDED: state budget of " << cfg.budget << " exhausted\n";
      return kExitError;
  }
  return kExitError;
}

int cmd_gen(const RunConfig& cfg) {
  Instance inst = gen_instance(parse_instance_class(cfg.cls), cfg.n, cfg.k, cfg.seed);
  write_output(cfg.out, format_instance(inst));
  return kExitOk;
}

int cmd_crosscheck(const RunConfig& cfg) {
  CrosscheckOptions options;
  options.cls = parse_instance_class(cfg.cls);
  options.max_n = cfg.n;
  options.max_k = cfg.k;
  options.seed = cfg.seed;
  options.budget = cfg.budget;
  options.jobs = cfg.jobs;
  if (cfg.count == "exhaustive") {
    options.exhaustive = true;
  } else {
    options.count = std::stoi(cfg.count);
  }
  CrosscheckReport report = crosscheck(options);
  write_output(cfg.out, report.format());
  std::cerr << "YES " << report.yes << "\n";
  return report.mismatches.empty() ? kExitOk : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest sliding-token reconfiguration on proper interval graphs, "
               "trivially perfect graphs and caterpillars"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", cfg.in, "Instance file, - for stdin")->capture_default_str();
    sub->add_option("--out", cfg.out, "Output file, - for stdout")->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand("solve", "Decide and print a shortest sequence");
  add_io(solve);
  solve->add_option("--class", cfg.cls, "auto, proper, tp or caterpillar")->capture_default_str();
  solve->add_flag("--decide-only", cfg.decide_only, "Print YES or NO without the sequence");

  CLI::App* verify = app.add_subcommand("verify", "Check a move list against an instance");
  add_io(verify);
  verify->add_option("--seq", cfg.seq, "Move list file (solve output is accepted)")->required();

  CLI::App* orc = app.add_subcommand("oracle", "Breadth-first search over all independent sets");
  add_io(orc);
  orc->add_option("--budget", cfg.budget, "Maximum number of discovered states")->capture_default_str();

  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--class", cfg.cls, "proper, tp or caterpillar")->required();
  gen->add_option("--n", cfg.n, "Number of vertices")->capture_default_str();
  gen->add_option("--k", cfg.k, "Number of tokens")->capture_default_str();
  gen->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  gen->add_option("--out", cfg.out, "Output file, - for stdout")->capture_default_str();

  CLI::App* cross = app.add_subcommand("crosscheck", "Compare a solver with the oracle");
  cross->add_option("--class", cfg.cls, "proper, tp or caterpillar")->required();
  cross->add_option("--n", cfg.n, "Largest number of vertices")->capture_default_str();
  cross->add_option("--k", cfg.k, "Largest number of tokens")->capture_default_str();
  cross->add_option("--count", cfg.count, "Number of random instances, or 'exhaustive'")->capture_default_str();
  cross->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  cross->add_option("--budget", cfg.budget, "Oracle state budget per search")->capture_default_str();
  cross->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
  cross->add_option("--out", cfg.out, "Output file, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve) return cmd_solve(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*orc) return cmd_oracle(cfg);
    if (*gen) return cmd_gen(cfg);
    if (*cross) return cmd_crosscheck(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.code() << ": " << e.what();
    for (auto [u, v] : e.pairs()) std::cerr << " (" << u << "," << v << ")";
    std::cerr << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}
