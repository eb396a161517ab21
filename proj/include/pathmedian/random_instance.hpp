#ifndef PATHMEDIAN_RANDOM_INSTANCE_HPP
#define PATHMEDIAN_RANDOM_INSTANCE_HPP

#include <cstdint>
#include <random>

#include "pathmedian/path_network.hpp"

namespace pathmedian {

// Seeded generator for test instances. Doubles are derived from the raw
// 64-bit stream of mt19937_64 so the values are identical on every platform
// (the standard distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);
  int pick(int n);  // {0, ..., n-1}

 private:
  std::mt19937_64 engine_;
};

// Random instance with log-uniform edge lengths, capacity and travel
// constant; about a quarter of the weight intervals are degenerate.
PathNetwork random_network(Rng& rng, int n);

Scenario random_scenario(Rng& rng, const PathNetwork& net);

// Random point on the path; vertices are picked with positive probability.
double random_point(Rng& rng, const PathNetwork& net);

}  // namespace pathmedian

#endif
