#include "pathmedian/evacuation.hpp"

#include <algorithm>

namespace pathmedian {

namespace detail {

void ClusterSweep::push(int vertex, double u, double weight) {
  total_weight_ += weight;
  const double g = total_weight_ / c_ - tau_ * u;
  double sigma = weight;
  int other_end = vertex;
  while (!stack_.empty() && stack_.back().g <= g) {
    const Entry& top = stack_.back();
    sigma += top.sigma;
    other_end = top.other_end;
    s1_ -= top.sigma;
    s2_ -= top.sigma * top.u;
    s3_ -= top.sigma * top.sigma;
    stack_.pop_back();
  }
  s1_ += sigma;
  s2_ += sigma * u;
  s3_ += sigma * sigma;
  stack_.push_back({vertex, other_end, u, sigma, g});
}

}  // namespace detail

namespace {

using detail::ClusterSweep;

// Index of the last vertex strictly left of x (own supply excluded at a
// vertex), or -1 if there is none.
int left_limit(const PointOnPath& x) {
  return x.is_vertex ? x.index - 1 : x.index;
}

// Index of the first vertex strictly right of x, or n if there is none.
// The same expression covers both cases: for x in edge e the next vertex
// is e+1, and a vertex's own supply is excluded.
int right_limit(const PointOnPath& x) { return x.index + 1; }

ClusterSweep sweep_left_range(const PathNetwork& net, const Scenario& s,
                              int limit) {
  ClusterSweep sw(net.capacity(), net.tau());
  for (int j = 0; j <= limit; ++j) sw.push(j, net.coord(j), s.weights[j]);
  return sw;
}

ClusterSweep sweep_right_range(const PathNetwork& net, const Scenario& s,
                               int first) {
  ClusterSweep sw(net.capacity(), net.tau());
  for (int j = net.size() - 1; j >= first; --j) {
    sw.push(j, -net.coord(j), s.weights[j]);
  }
  return sw;
}

}  // namespace

ClusterSequence left_clusters(const PathNetwork& net, const Scenario& s,
                              const PointOnPath& x) {
  ClusterSequence out;
  out.direction = Direction::Left;
  const int limit = left_limit(x);
  out.range_begin = 0;
  out.range_end = limit;
  if (limit < 0) return out;
  ClusterSweep sw = sweep_left_range(net, s, limit);
  out.entries.reserve(sw.stack().size());
  for (const auto& e : sw.stack()) {
    // resum in index order so the weight is independent of the merge order
    double sigma = 0.0;
    for (int j = e.other_end; j <= e.head; ++j) sigma += s.weights[j];
    out.entries.push_back({e.head, sigma});
  }
  return out;
}

ClusterSequence right_clusters(const PathNetwork& net, const Scenario& s,
                               const PointOnPath& x) {
  ClusterSequence out;
  out.direction = Direction::Right;
  const int first = right_limit(x);
  out.range_begin = first;
  out.range_end = net.size() - 1;
  if (first > net.size() - 1) return out;
  ClusterSweep sw = sweep_right_range(net, s, first);
  out.entries.reserve(sw.stack().size());
  for (const auto& e : sw.stack()) {
    double sigma = 0.0;
    for (int j = e.other_end; j >= e.head; --j) sigma += s.weights[j];
    out.entries.push_back({e.head, sigma});
  }
  return out;
}

double cost_left(const PathNetwork& net, const Scenario& s, double x) {
  const PointOnPath p = locate(net, x);
  const int limit = left_limit(p);
  if (limit < 0) return 0.0;
  ClusterSweep sw = sweep_left_range(net, s, limit);
  const double c = net.capacity();
  double total = 0.0;
  for (const auto& e : sw.stack()) {
    total += e.sigma * net.tau() * (x - net.coord(e.head)) +
             e.sigma * e.sigma / (2.0 * c);
  }
  return total;
}

double cost_right(const PathNetwork& net, const Scenario& s, double x) {
  const PointOnPath p = locate(net, x);
  const int first = right_limit(p);
  if (first > net.size() - 1) return 0.0;
  ClusterSweep sw = sweep_right_range(net, s, first);
  const double c = net.capacity();
  double total = 0.0;
  for (const auto& e : sw.stack()) {
    total += e.sigma * net.tau() * (net.coord(e.head) - x) +
             e.sigma * e.sigma / (2.0 * c);
  }
  return total;
}

double cost(const PathNetwork& net, const Scenario& s, double x) {
  return cost_left(net, s, x) + cost_right(net, s, x);
}

std::vector<double> vertex_costs_all(const PathNetwork& net,
                                     const Scenario& s) {
  const int n = net.size();
  std::vector<double> out(n, 0.0);
  {
    ClusterSweep sw(net.capacity(), net.tau());
    for (int h = 0; h < n; ++h) {
      if (h > 0) sw.push(h - 1, net.coord(h - 1), s.weights[h - 1]);
      out[h] = sw.cost_at(net.coord(h));
    }
  }
  {
    ClusterSweep sw(net.capacity(), net.tau());
    for (int h = n - 1; h >= 0; --h) {
      if (h < n - 1) sw.push(h + 1, -net.coord(h + 1), s.weights[h + 1]);
      out[h] += sw.cost_at(-net.coord(h));
    }
  }
  return out;
}

std::vector<EdgeCostLine> edge_lines(const PathNetwork& net,
                                     const Scenario& s) {
  const int n = net.size();
  const double c = net.capacity();
  const double tau = net.tau();
  std::vector<EdgeCostLine> out(std::max(0, n - 1));
  // Left-of-edge sums: edge e has vertices 0..e on its left.
  {
    ClusterSweep sw(c, tau);
    for (int e = 0; e < n - 1; ++e) {
      sw.push(e, net.coord(e), s.weights[e]);
      out[e].edge = e;
      out[e].slope = tau * sw.s1();
      out[e].intercept = -tau * sw.s2() + sw.s3() / (2.0 * c);
    }
  }
  // Right-of-edge sums: edge e has vertices e+1..n-1 on its right. The sweep
  // frame negates coordinates, so the head-coordinate sum flips sign.
  {
    ClusterSweep sw(c, tau);
    for (int e = n - 2; e >= 0; --e) {
      sw.push(e + 1, -net.coord(e + 1), s.weights[e + 1]);
      out[e].slope -= tau * sw.s1();
      out[e].intercept += tau * (-sw.s2()) + sw.s3() / (2.0 * c);
    }
  }
  return out;
}

MedianResult median(const PathNetwork& net, const Scenario& s) {
  const std::vector<double> costs = vertex_costs_all(net, s);
  int best = 0;
  for (int i = 1; i < static_cast<int>(costs.size()); ++i) {
    if (costs[i] < costs[best]) best = i;
  }
  return {best, costs[best]};
}

}  // namespace pathmedian
