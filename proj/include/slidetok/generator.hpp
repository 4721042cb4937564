#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "slidetok/instance.hpp"

namespace slidetok {

// Seeded random source with platform-independent derived draws
// (standard distributions are implementation-defined, so they are avoided here).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  bool chance(double p);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[uniform(0, i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class InstanceClass { Proper, TriviallyPerfect, Caterpillar };

// Accepts proper, tp, caterpillar.
InstanceClass parse_instance_class(const std::string& name);
const char* to_string(InstanceClass c);

// Random twin-free connected instance with |blue| = |red| = k.
// Throws SolverError INFEASIBLE when no instance is found within the retry budget.
Instance gen_instance(InstanceClass cls, int n, int k, std::uint64_t seed);

// Representation-only generators used by gen_instance; vertex labels are shuffled.
IntervalRepresentation random_proper_representation(int n, Rng& rng);
IntervalRepresentation random_nesting(int n, Rng& rng);
std::vector<Edge> random_caterpillar(int n, Rng& rng);

}  // namespace slidetok
