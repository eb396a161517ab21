#ifndef PATHMEDIAN_EVACUATION_HPP
#define PATHMEDIAN_EVACUATION_HPP

#include <vector>

#include "pathmedian/path_network.hpp"

namespace pathmedian {

enum class Direction { Left, Right };

struct Cluster {
  int head = 0;        // vertex index of the cluster head (0-based)
  double sigma = 0.0;  // total supply of the cluster
};

// Directional congestion decomposition of the supplies on one side of an
// evaluation point. Entries are ordered from the farthest cluster to the
// nearest; each head is the vertex of its cluster closest to the point.
struct ClusterSequence {
  Direction direction = Direction::Left;
  std::vector<Cluster> entries;
  int range_begin = 0;  // inclusive vertex range covered; empty if begin > end
  int range_end = -1;
};

ClusterSequence left_clusters(const PathNetwork& net, const Scenario& s,
                              const PointOnPath& x);
ClusterSequence right_clusters(const PathNetwork& net, const Scenario& s,
                               const PointOnPath& x);

// Total evacuation time to x of all supply strictly left (right) of x.
double cost_left(const PathNetwork& net, const Scenario& s, double x);
double cost_right(const PathNetwork& net, const Scenario& s, double x);

// Total evacuation time to x. At a vertex the vertex's own supply
// contributes nothing.
double cost(const PathNetwork& net, const Scenario& s, double x);

// All vertex costs in O(n) total via two amortized cluster sweeps.
std::vector<double> vertex_costs_all(const PathNetwork& net, const Scenario& s);

// Linear restriction of the cost to the open interior of one edge.
struct EdgeCostLine {
  int edge = 0;
  double slope = 0.0;
  double intercept = 0.0;
};

std::vector<EdgeCostLine> edge_lines(const PathNetwork& net, const Scenario& s);

struct MedianResult {
  int vertex = 0;
  double cost = 0.0;
};

// Cost-minimizing vertex; ties broken by smallest index.
MedianResult median(const PathNetwork& net, const Scenario& s);

namespace detail {

// Monotone cluster stack over vertices processed from far to near in an
// ascending "u" coordinate (u = v for left sweeps, u = -v mirrored for
// right sweeps). A later-pushed vertex wins ties, which realizes the
// maximum-index head rule.
class ClusterSweep {
 public:
  ClusterSweep(double capacity, double tau) : c_(capacity), tau_(tau) {}

  void push(int vertex, double u, double weight);

  // Sum of evacuation times to a point at coordinate u (>= all pushed u).
  double cost_at(double u) const {
    return tau_ * (u * s1_ - s2_) + s3_ / (2.0 * c_);
  }

  double s1() const { return s1_; }  // sum of sigma
  double s2() const { return s2_; }  // sum of sigma * u_head
  double s3() const { return s3_; }  // sum of sigma^2

  struct Entry {
    int head;
    int other_end;  // vertex id at the far end of the cluster
    double u;       // head coordinate in the sweep frame
    double sigma;
    double g;
  };
  const std::vector<Entry>& stack() const { return stack_; }

 private:
  double c_, tau_;
  double total_weight_ = 0.0;
  double s1_ = 0.0, s2_ = 0.0, s3_ = 0.0;
  std::vector<Entry> stack_;
};

}  // namespace detail

}  // namespace pathmedian

#endif
