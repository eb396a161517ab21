#include "pathmedian/random_instance.hpp"

#include <cmath>

namespace pathmedian {

double Rng::uniform() {
  // 53 random bits, exactly representable in a double
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

int Rng::pick(int n) {
  return static_cast<int>(uniform() * n) % n;  // modulo guards uniform()==1-ulp
}

PathNetwork random_network(Rng& rng, int n) {
  std::vector<double> coords(n);
  coords[0] = 0.0;
  for (int i = 1; i < n; ++i) {
    coords[i] = coords[i - 1] + rng.log_uniform(0.1, 2.0);
  }
  std::vector<WeightInterval> intervals(n);
  for (int i = 0; i < n; ++i) {
    const double wmin = rng.log_uniform(0.2, 2.0);
    const bool degenerate = rng.uniform() < 0.25;
    intervals[i] = {wmin, degenerate ? wmin : wmin * rng.uniform(1.0, 3.0)};
  }
  const double c = rng.log_uniform(0.5, 2.0);
  const double tau = rng.log_uniform(0.5, 2.0);
  return PathNetwork(std::move(coords), std::move(intervals), c, tau);
}

Scenario random_scenario(Rng& rng, const PathNetwork& net) {
  Scenario s;
  s.weights.reserve(net.size());
  for (int i = 0; i < net.size(); ++i) {
    const auto& iv = net.interval(i);
    s.weights.push_back(rng.uniform(iv.min, iv.max));
  }
  return s;
}

double random_point(Rng& rng, const PathNetwork& net) {
  if (net.size() == 1 || rng.uniform() < 0.25) {
    return net.coord(rng.pick(net.size()));
  }
  return rng.uniform(0.0, net.span());
}

}  // namespace pathmedian
