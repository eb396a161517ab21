#ifndef PATHMEDIAN_SCENARIO_SPACE_HPP
#define PATHMEDIAN_SCENARIO_SPACE_HPP

#include <vector>

#include "pathmedian/path_network.hpp"

namespace pathmedian {

enum class Side { Left, Right };

// A scenario that is all-max on one part of the path and all-min on the
// other, except for one free-weight intermediate vertex.
struct PseudoBipartiteSpec {
  Side side = Side::Left;
  int intermediate = 0;  // 0-based vertex index
  double weight = 0.0;
};

// Left-bipartite: w_max on vertices 0..i, w_min on i+1..n-1. Right-bipartite
// is the mirror image. Requires 0 <= i <= n-2.
Scenario bipartite(const PathNetwork& net, Side side, int i);

// Realizes the weight vector of a pseudo-bipartite spec; the intermediate's
// weight must lie inside its interval.
Scenario pseudo_bipartite(const PathNetwork& net,
                          const PseudoBipartiteSpec& spec);

struct CriticalMember {
  PseudoBipartiteSpec spec;
  Scenario scenario;
};

// All critical pseudo-bipartite scenarios for one anchor vertex: the
// intermediate weights at which two of the anchor's directional clusters
// merge, plus the interval endpoints of every admissible intermediate.
struct CriticalScenarioSet {
  int anchor = 0;
  std::vector<CriticalMember> members;
};

// Left family sweeps intermediates right of the anchor in ascending
// (intermediate, weight) order; the right family mirrors it. O(n) per anchor.
CriticalScenarioSet critical_set_for_vertex(const PathNetwork& net, int y);

struct UniverseMember {
  int anchor = 0;
  PseudoBipartiteSpec spec;
  Scenario scenario;
};

// Deduplicated union of the critical sets of all anchors, in canonical
// (anchor, side, intermediate, weight) order. Size O(n^2).
struct ScenarioUniverse {
  std::vector<UniverseMember> members;
};

ScenarioUniverse universe(const PathNetwork& net);

}  // namespace pathmedian

#endif
