#include "slidetok/crosscheck.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <sstream>
#include <thread>

#include "slidetok/solve.hpp"

namespace slidetok {

SolverFn default_solver(InstanceClass cls) {
  SolveOptions options;
  switch (cls) {
    case InstanceClass::Proper: options.selector = ClassSelector::Proper; break;
    case InstanceClass::TriviallyPerfect: options.selector = ClassSelector::TriviallyPerfect; break;
    case InstanceClass::Caterpillar: options.selector = ClassSelector::Caterpillar; break;
  }
  return [options](const Instance& inst) { return solve_instance(inst, options); };
}

std::string CrosscheckReport::format() const {
  std::ostringstream out;
  for (const auto& m : mismatches) {
    out << "MISMATCH " << m.instance << " solver=" << m.solver << " oracle=" << m.oracle;
    if (!m.note.empty()) out << " note=" << m.note;
    out << '\n';
  }
  out << "CHECKED " << checked << " MISMATCHES " << mismatches.size() << '\n';
  return out.str();
}

namespace {

// Oracle answer for one pair: distance, unreachable (nullopt), or over budget.
struct OracleAnswer {
  bool capped = false;
  std::optional<int> distance;
};

void compare(const Instance& inst, const Graph& g, const OracleAnswer& want, const SolverFn& solver,
             InstanceClass cls, CrosscheckReport& report) {
  ++report.checked;
  auto add = [&](std::string got, std::string note) {
    std::string expected = want.capped ? "CAP_EXCEEDED" : want.distance ? std::to_string(*want.distance) : "NO";
    report.mismatches.push_back({format_instance_inline(inst), std::move(got), std::move(expected), std::move(note)});
  };
  SolveResult res;
  try {
    res = solver(inst);
  } catch (const SolverError& e) {
    add("ERROR:" + e.code(), e.what());
    return;
  }
  const std::string got = res.yes ? std::to_string(res.sequence.moves.size()) : "NO";
  if (want.capped) {
    add(got, "oracle budget exhausted");
    return;
  }
  if (res.yes != want.distance.has_value()) {
    add(got, res.yes ? "" : res.witness.reason);
    return;
  }
  if (!res.yes) return;
  ++report.yes;
  Validation v = validate_sequence(g, inst.blue, inst.red, res.sequence);
  if (!v) {
    add(got, "invalid sequence at step " + std::to_string(v.step) + ": " + v.reason);
    return;
  }
  if (static_cast<int>(res.sequence.moves.size()) != *want.distance) {
    add(got, "");
    return;
  }
  if (cls == InstanceClass::TriviallyPerfect && res.sequence.moves.size() > 2 * inst.blue.k()) {
    ++report.bound_violations;
    add(got, "more than 2k slides");
  }
}

void merge(CrosscheckReport& into, CrosscheckReport&& part) {
  into.checked += part.checked;
  into.yes += part.yes;
  into.bound_violations += part.bound_violations;
  for (auto& m : part.mismatches) into.mismatches.push_back(std::move(m));
}

// Runs task(i) for i in [0, count) on `jobs` threads and merges the partial
// reports in index order so the output does not depend on scheduling.
template <class Task>
CrosscheckReport run_tasks(std::size_t count, int jobs, Task&& task) {
  std::vector<CrosscheckReport> parts(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) parts[i] = task(i);
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  CrosscheckReport report;
  for (auto& p : parts) merge(report, std::move(p));
  return report;
}

// Balanced LEFT/RIGHT words of length 2n.
void balanced_words(int n, std::vector<Side>& word, int opened, int closed, std::vector<std::vector<Side>>& out) {
  if (closed == n) {
    out.push_back(word);
    return;
  }
  if (opened < n) {
    word.push_back(Side::Left);
    balanced_words(n, word, opened + 1, closed, out);
    word.pop_back();
  }
  if (closed < opened) {
    word.push_back(Side::Right);
    balanced_words(n, word, opened, closed + 1, out);
    word.pop_back();
  }
}

// Leaf counts per spine vertex; ends need a leaf and a single spine vertex needs two.
void caterpillar_shapes(int n, std::vector<std::vector<int>>& out) {
  for (int m = 1; m <= n - 2; ++m) {
    std::vector<int> counts(m, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == m) {
        if (left != 0) return;
        if (m == 1 && counts[0] < 2) return;
        if (m >= 2 && (counts[0] == 0 || counts[m - 1] == 0)) return;
        std::vector<int> rev(counts.rbegin(), counts.rend());
        if (rev < counts) return;  // keep one of each mirror pair
        out.push_back(counts);
        return;
      }
      for (int c = 0; c <= left; ++c) {
        counts[i] = c;
        self(self, i + 1, left - c);
      }
    };
    rec(rec, 0, n - m);
  }
}

void collect_sets(const Graph& g, int k, Vertex from, std::vector<Vertex>& cur, std::vector<IndependentSet>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.emplace_back(cur);
    return;
  }
  for (Vertex v = from; v <= g.n(); ++v) {
    bool ok = std::none_of(cur.begin(), cur.end(), [&](Vertex u) { return g.adjacent(u, v); });
    if (!ok) continue;
    cur.push_back(v);
    collect_sets(g, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IndependentSet> independent_sets(const Graph& g, int k) {
  std::vector<IndependentSet> out;
  std::vector<Vertex> cur;
  collect_sets(g, k, 1, cur, out);
  return out;
}

std::vector<Instance> enumerate_shapes(InstanceClass cls, int n) {
  std::vector<Instance> shapes;
  if (cls == InstanceClass::Caterpillar) {
    std::vector<std::vector<int>> all;
    caterpillar_shapes(n, all);
    for (const auto& counts : all) {
      Instance inst;
      inst.n = n;
      const int m = static_cast<int>(counts.size());
      for (int i = 1; i < m; ++i) inst.edges.emplace_back(i, i + 1);
      Vertex next = m + 1;
      for (int i = 0; i < m; ++i) {
        for (int c = 0; c < counts[i]; ++c) inst.edges.emplace_back(i + 1, next++);
      }
      shapes.push_back(std::move(inst));
    }
    return shapes;
  }
  std::vector<std::vector<Side>> words;
  std::vector<Side> word;
  balanced_words(n, word, 0, 0, words);
  for (const auto& w : words) {
    // Proper: a RIGHT closes the oldest open interval. Nesting: the newest.
    std::vector<Vertex> open;
    std::size_t head = 0;
    Vertex next = 1;
    std::vector<Endpoint> events;
    for (Side s : w) {
      if (s == Side::Left) {
        open.push_back(next);
        events.push_back({next++, Side::Left});
      } else if (cls == InstanceClass::Proper) {
        events.push_back({open[head++], Side::Right});
      } else {
        events.push_back({open.back(), Side::Right});
        open.pop_back();
      }
    }
    IntervalRepresentation rep(std::move(events));
    if (!find_strong_twins(intersection_graph(rep)).empty()) continue;
    Instance inst;
    inst.n = n;
    inst.rep = std::move(rep);
    shapes.push_back(std::move(inst));
  }
  return shapes;
}

void check_instance(const Instance& inst, const SolverFn& solver, InstanceClass cls, std::uint64_t budget,
                    CrosscheckReport& report) {
  Graph g = inst.graph();
  OracleAnswer want;
  if (inst.blue.k() == inst.red.k()) {
    oracle::OracleResult r = oracle::bfs(g, inst.blue, inst.red, budget);
    want.capped = r.status == oracle::Status::CapExceeded;
    want.distance = r.distance;
  }
  compare(inst, g, want, solver ? solver : default_solver(cls), cls, report);
}

CrosscheckReport crosscheck(const CrosscheckOptions& options, const SolverFn& solver) {
  const SolverFn run = solver ? solver : default_solver(options.cls);
  if (!options.exhaustive) {
    // Per-instance seeds come from one stream so the instance list is fixed by `seed`.
    Rng master(options.seed);
    struct Draw {
      int n, k;
      std::uint64_t seed;
    };
    std::vector<Draw> draws;
    const int lo = std::min(3, options.max_n);
    for (int i = 0; i < options.count; ++i) {
      int n = master.uniform(lo, options.max_n);
      int k = master.uniform(1, std::max(1, options.max_k));
      draws.push_back({n, k, master.next()});
    }
    return run_tasks(draws.size(), options.jobs, [&](std::size_t i) {
      CrosscheckReport part;
      Instance inst;
      try {
        inst = gen_instance(options.cls, draws[i].n, draws[i].k, draws[i].seed);
      } catch (const SolverError&) {
        return part;  // k exceeds what the drawn shape admits
      }
      check_instance(inst, run, options.cls, options.budget, part);
      return part;
    });
  }

  struct Task {
    Instance shape;
    int k;
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= options.max_n; ++n) {
    for (Instance& shape : enumerate_shapes(options.cls, n)) {
      for (int k = 1; k <= std::min(options.max_k, n); ++k) tasks.push_back({shape, k});
    }
  }
  return run_tasks(tasks.size(), options.jobs, [&](std::size_t i) {
    CrosscheckReport part;
    const Task& task = tasks[i];
    Graph g = task.shape.graph();
    std::vector<IndependentSet> sets = independent_sets(g, task.k);
    Instance inst = task.shape;
    for (const IndependentSet& blue : sets) {
      auto dist = oracle::distances_from(g, blue, options.budget);
      inst.blue = blue;
      for (const IndependentSet& red : sets) {
        OracleAnswer want;
        if (!dist) {
          want.capped = true;
        } else if (auto it = dist->find(oracle::StateKey(red)); it != dist->end()) {
          want.distance = it->second;
        }
        inst.red = red;
        compare(inst, g, want, run, options.cls, part);
      }
    }
    return part;
  });
}

}  // namespace slidetok
