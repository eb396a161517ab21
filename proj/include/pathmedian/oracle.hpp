#ifndef PATHMEDIAN_ORACLE_HPP
#define PATHMEDIAN_ORACLE_HPP

#include <utility>
#include <vector>

#include "pathmedian/evacuation.hpp"
#include "pathmedian/path_network.hpp"
#include "pathmedian/scenario_space.hpp"

namespace pathmedian::oracle {

// Exact total evacuation time to x by event-driven fluid propagation:
// piecewise-constant-rate flows, FCFS queues at vertices, arrival streams
// integrated in closed form. No time discretization.
double simulate_cost(const PathNetwork& net, const Scenario& s, double x);

// Direct argmax scan of the cluster head recurrence, O(n^2), with the
// maximum-index tie rule (for right clusters: nearest-the-point index).
// Independent of the sweep-based clustering.
ClusterSequence brute_clusters(const PathNetwork& net, const Scenario& s,
                               const PointOnPath& x, Direction dir);

// Max regret at x over all pseudo-bipartite scenarios with the intermediate
// weight on a uniform grid of `grid` subdivisions per vertex interval.
// Grids nest when one subdivision count divides another.
double pseudo_bipartite_grid_max(const PathNetwork& net, double x, int grid);

// Grid max above, extended with every member of the critical scenario
// universe. Monotone nondecreasing under grid refinement with nested grids.
double sampled_max_regret(const PathNetwork& net, double x, int grid);

// Exhaustive minimax search over an x-grid (plus vertices and the pairwise
// crossings of the universe's per-edge regret lines) of sampled_max_regret.
// Guarded to small instances.
std::pair<double, double> exhaustive_solve(const PathNetwork& net,
                                           double x_grid_step, int grid);

// O(n^2) recomputation of the critical scenario vectors for one anchor:
// re-clusters from scratch at every candidate weight found by a per-cluster
// closed-form solve. Returns realized weight vectors, sorted, deduplicated.
std::vector<std::vector<double>> brute_critical_set(const PathNetwork& net,
                                                    int y);

}  // namespace pathmedian::oracle

#endif
