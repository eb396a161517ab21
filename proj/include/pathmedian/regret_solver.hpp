#ifndef PATHMEDIAN_REGRET_SOLVER_HPP
#define PATHMEDIAN_REGRET_SOLVER_HPP

#include <span>
#include <vector>

#include "pathmedian/path_network.hpp"
#include "pathmedian/scenario_space.hpp"

namespace pathmedian {

// Regret of sink location x under scenario s: cost above the scenario's own
// median cost. Always >= 0.
double regret(const PathNetwork& net, const Scenario& s, double x);

// Cost difference between two sink locations under one scenario.
double gap(const PathNetwork& net, const Scenario& s, double x, double y);

// Regret restricted to the open interior of one edge: value = slope*x + offset.
struct RegretLine {
  double slope = 0.0;
  double offset = 0.0;
  int scenario = -1;  // index into the scenario universe
};

struct EnvelopeResult {
  double x = 0.0;
  double value = 0.0;
  int line = -1;  // scenario id of a line attaining the envelope at x
};

// Minimizes max_i (slope_i*x + offset_i) over [lo, hi]. The upper envelope is
// convex, so the minimum sits at an envelope breakpoint or at an endpoint;
// ties in x are broken toward the smaller x. Throws on an empty line set.
EnvelopeResult envelope_min_max(std::span<const RegretLine> lines, double lo,
                                double hi);

struct VertexRegret {
  double r_max = 0.0;
  int witness = -1;  // universe index of a scenario attaining r_max
};

// Maximum regret at every vertex over the scenario universe. On ties the
// first scenario in canonical universe order is recorded.
std::vector<VertexRegret> max_regret_at_vertices(const PathNetwork& net,
                                                 const ScenarioUniverse& u);

struct EdgeMin {
  int edge = 0;
  double x = 0.0;
  double value = 0.0;
  int witness = -1;
};

// Minimum over the closed edge span of the maximum regret, using the
// open-edge linear regret of each universe scenario. The values at the
// endpoints are one-sided limits; vertex values are handled separately.
EdgeMin min_max_regret_on_edge(const PathNetwork& net,
                               const ScenarioUniverse& u, int edge_index);

struct Solution {
  PointOnPath x_star;
  double value = 0.0;
  int witness = -1;
  UniverseMember witness_member;
  std::vector<VertexRegret> vertex_report;
  std::vector<EdgeMin> edge_report;
};

// Full minimax regret median: builds the scenario universe, evaluates all
// vertices and all edge minima, and returns the best of the 2n-1 candidates.
// Ties go to the smallest coordinate, then to a vertex over an edge minimum.
Solution solve(const PathNetwork& net);
Solution solve(const PathNetwork& net, const ScenarioUniverse& u);

// Samples of (x, R_max(x)) across the whole path: `samples` uniform points
// plus every vertex, sorted and deduplicated.
std::vector<std::pair<double, double>> regret_curve(const PathNetwork& net,
                                                    const ScenarioUniverse& u,
                                                    int samples);

}  // namespace pathmedian

#endif
