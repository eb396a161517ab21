#include "pathmedian/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <set>

#include "pathmedian/regret_solver.hpp"

namespace pathmedian::oracle {

namespace {

// Cumulative flow profile: starts at time t0 with nothing released, then a
// sequence of constant-rate segments. Rates are copied exactly (either the
// capacity or an upstream rate), so capacity comparisons stay exact.
struct FlowProfile {
  double t0 = 0.0;
  std::vector<std::pair<double, double>> segs;  // (duration, rate)

  void append(double duration, double rate) {
    if (duration <= 0.0) return;
    if (!segs.empty() && segs.back().second == rate) {
      segs.back().first += duration;
    } else {
      segs.emplace_back(duration, rate);
    }
  }
};

// Pushes `local` supply (present at time 0) plus the arriving stream through
// a vertex whose outgoing edge admits at most rate c. Waiting units are
// served first-come first-served; the aggregate release profile below does
// not depend on the intra-queue order.
FlowProfile pass_through_vertex(const FlowProfile& arrivals, double local,
                                double c) {
  FlowProfile out;
  double backlog = local;
  double clock = 0.0;

  auto process = [&](double duration, double rate) {
    if (duration <= 0.0) return;
    if (backlog > 0.0) {
      if (rate < c) {
        const double t_clear = backlog / (c - rate);
        if (t_clear <= duration) {
          out.append(t_clear, c);
          backlog = 0.0;
          out.append(duration - t_clear, rate);
        } else {
          out.append(duration, c);
          backlog += (rate - c) * duration;
        }
      } else {
        // rate == c: the backlog neither grows nor shrinks
        out.append(duration, c);
      }
    } else {
      out.append(duration, rate);
    }
    clock += duration;
  };

  process(arrivals.t0, 0.0);
  for (const auto& [dur, rate] : arrivals.segs) process(dur, rate);
  if (backlog > 0.0) out.append(backlog / c, c);
  return out;
}

// Sum of arrival times at the sink over all units of the profile.
double arrival_time_integral(const FlowProfile& f) {
  double total = 0.0;
  double t = f.t0;
  for (const auto& [dur, rate] : f.segs) {
    const double t2 = t + dur;
    total += rate * (t2 * t2 - t * t) / 2.0;
    t = t2;
  }
  return total;
}

// Evacuation of the vertices at ascending coordinates `v` (all < sink) with
// supplies `w`, toward a sink at `sink`.
double one_sided_cost(const std::vector<double>& v, const std::vector<double>& w,
                      double sink, double c, double tau) {
  if (v.empty()) return 0.0;
  FlowProfile f = pass_through_vertex(FlowProfile{}, w[0], c);
  for (std::size_t j = 1; j < v.size(); ++j) {
    f.t0 += tau * (v[j] - v[j - 1]);
    f = pass_through_vertex(f, w[j], c);
  }
  f.t0 += tau * (sink - v.back());
  return arrival_time_integral(f);
}

}  // namespace

double simulate_cost(const PathNetwork& net, const Scenario& s, double x) {
  const PointOnPath p = locate(net, x);
  const int n = net.size();
  const int left_last = p.is_vertex ? p.index - 1 : p.index;
  const int right_first = p.index + 1;

  std::vector<double> v, w;
  for (int j = 0; j <= left_last; ++j) {
    v.push_back(net.coord(j));
    w.push_back(s.weights[j]);
  }
  double total = one_sided_cost(v, w, x, net.capacity(), net.tau());

  v.clear();
  w.clear();
  for (int j = n - 1; j >= right_first; --j) {
    v.push_back(-net.coord(j));
    w.push_back(s.weights[j]);
  }
  total += one_sided_cost(v, w, -x, net.capacity(), net.tau());
  return total;
}

ClusterSequence brute_clusters(const PathNetwork& net, const Scenario& s,
                               const PointOnPath& x, Direction dir) {
  const int n = net.size();
  const double c = net.capacity();
  const double tau = net.tau();
  ClusterSequence out;
  out.direction = dir;

  if (dir == Direction::Left) {
    const int limit = x.is_vertex ? x.index - 1 : x.index;
    out.range_begin = 0;
    out.range_end = limit;
    int rho_prev = -1;
    while (rho_prev < limit) {
      int best = rho_prev + 1;
      double best_val = -std::numeric_limits<double>::infinity();
      double run = 0.0, best_run = 0.0;
      for (int j = rho_prev + 1; j <= limit; ++j) {
        run += s.weights[j];
        const double val = tau * (net.coord(limit) - net.coord(j)) + run / c;
        if (val >= best_val) {  // maximum index wins ties
          best_val = val;
          best = j;
          best_run = run;
        }
      }
      out.entries.push_back({best, best_run});
      rho_prev = best;
    }
  } else {
    const int first = x.index + 1;
    out.range_begin = first;
    out.range_end = n - 1;
    int rho_prev = n;
    while (rho_prev > first) {
      int best = rho_prev - 1;
      double best_val = -std::numeric_limits<double>::infinity();
      double run = 0.0, best_run = 0.0;
      for (int j = rho_prev - 1; j >= first; --j) {
        run += s.weights[j];
        const double val = tau * (net.coord(j) - net.coord(first)) + run / c;
        if (val >= best_val) {  // minimum index (nearest the point) wins ties
          best_val = val;
          best = j;
          best_run = run;
        }
      }
      out.entries.push_back({best, best_run});
      rho_prev = best;
    }
  }
  return out;
}

namespace {

double regret_of(const PathNetwork& net, const Scenario& s, double x) {
  return cost(net, s, x) - median(net, s).cost;
}

}  // namespace

double pseudo_bipartite_grid_max(const PathNetwork& net, double x, int grid) {
  if (grid < 1) throw ValidationError("grid must have at least 1 subdivision");
  double best = 0.0;
  for (Side side : {Side::Left, Side::Right}) {
    for (int m = 0; m < net.size(); ++m) {
      const auto& iv = net.interval(m);
      for (int k = 0; k <= grid; ++k) {
        const double w =
            k == grid ? iv.max : iv.min + (iv.max - iv.min) * k / grid;
        const Scenario s = pseudo_bipartite(net, {side, m, w});
        best = std::max(best, regret_of(net, s, x));
      }
    }
  }
  return best;
}

double sampled_max_regret(const PathNetwork& net, double x, int grid) {
  double best = pseudo_bipartite_grid_max(net, x, grid);
  for (const UniverseMember& mem : universe(net).members) {
    best = std::max(best, regret_of(net, mem.scenario, x));
  }
  return best;
}

std::pair<double, double> exhaustive_solve(const PathNetwork& net,
                                           double x_grid_step, int grid) {
  const int n = net.size();
  if (n > 8) throw ValidationError("instance too large for exhaustive search");
  if (n == 1) return {net.coord(0), 0.0};

  // Scenario pool: the pseudo-bipartite weight grid plus the critical
  // universe (so the search sees at least everything the solver sees).
  std::vector<Scenario> pool;
  for (Side side : {Side::Left, Side::Right}) {
    for (int m = 0; m < n; ++m) {
      const auto& iv = net.interval(m);
      for (int k = 0; k <= grid; ++k) {
        const double w =
            k == grid ? iv.max : iv.min + (iv.max - iv.min) * k / grid;
        pool.push_back(pseudo_bipartite(net, {side, m, w}));
      }
    }
  }
  const ScenarioUniverse u = universe(net);
  for (const auto& mem : u.members) pool.push_back(mem.scenario);

  struct PerScenario {
    std::vector<double> vcost;
    std::vector<EdgeCostLine> lines;
    double med;
  };
  std::vector<PerScenario> pre;
  pre.reserve(pool.size());
  for (const Scenario& s : pool) {
    PerScenario ps;
    ps.vcost = vertex_costs_all(net, s);
    ps.med = *std::min_element(ps.vcost.begin(), ps.vcost.end());
    ps.lines = edge_lines(net, s);
    pre.push_back(std::move(ps));
  }

  std::vector<double> xs(net.coords());
  for (double x = 0.0; x < net.span(); x += x_grid_step) xs.push_back(x);
  // Candidate breakpoints: pairwise crossings of the universe's regret lines
  // inside each edge (the minimum of an upper envelope sits at a crossing or
  // an endpoint, and the x-grid alone would miss it).
  std::vector<std::size_t> uidx;
  for (std::size_t i = pool.size() - u.members.size(); i < pool.size(); ++i) {
    uidx.push_back(i);
  }
  for (int e = 0; e < n - 1; ++e) {
    for (std::size_t a = 0; a < uidx.size(); ++a) {
      for (std::size_t b = a + 1; b < uidx.size(); ++b) {
        const auto& la = pre[uidx[a]].lines[e];
        const auto& lb = pre[uidx[b]].lines[e];
        const double da = la.slope - lb.slope;
        if (da == 0.0) continue;
        const double cx = ((lb.intercept - pre[uidx[b]].med) -
                           (la.intercept - pre[uidx[a]].med)) /
                          da;
        if (cx > net.coord(e) && cx < net.coord(e + 1)) xs.push_back(cx);
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  double best_x = net.coord(0);
  double best_val = std::numeric_limits<double>::infinity();
  const auto& coords = net.coords();
  for (double x : xs) {
    const auto it = std::lower_bound(coords.begin(), coords.end(), x);
    double rmax = 0.0;
    if (it != coords.end() && *it == x) {
      const int i = static_cast<int>(it - coords.begin());
      for (const auto& ps : pre) rmax = std::max(rmax, ps.vcost[i] - ps.med);
    } else {
      const int e = static_cast<int>(it - coords.begin()) - 1;
      for (const auto& ps : pre) {
        rmax = std::max(rmax,
                        ps.lines[e].slope * x + ps.lines[e].intercept - ps.med);
      }
    }
    if (rmax < best_val) {
      best_val = rmax;
      best_x = x;
    }
  }
  return {best_x, best_val};
}

namespace {

// One directional family of critical weight vectors, by repeated
// from-scratch re-clustering. `reflect` realizes the right family by running
// on the mirror image.
void brute_family(const PathNetwork& net, int y, Side side,
                  std::set<std::vector<double>>& out) {
  const PathNetwork work = side == Side::Left ? net : net.reflected();
  const int n = work.size();
  const int anchor = side == Side::Left ? y : n - 1 - y;
  const double c = work.capacity();
  const double tau = work.tau();

  auto realize_work = [&](int m, double w) {
    Scenario s;
    s.weights.resize(n);
    for (int l = 0; l < n; ++l) {
      s.weights[l] = l < m   ? work.interval(l).max
                     : l > m ? work.interval(l).min
                             : w;
    }
    return s;
  };
  auto emit = [&](const Scenario& s) {
    std::vector<double> ws = s.weights;
    if (side == Side::Right) std::reverse(ws.begin(), ws.end());
    out.insert(std::move(ws));
  };

  const PointOnPath yp = locate(work, work.coord(anchor));
  for (int m = anchor + 1; m < n; ++m) {
    double w = work.interval(m).min;
    emit(realize_work(m, w));
    for (;;) {
      const Scenario s = realize_work(m, w);
      const ClusterSequence rc = brute_clusters(work, s, yp, Direction::Right);
      // entries are ordered farthest-first; find the cluster holding m
      int idx = -1;
      int range_end = n - 1;
      for (int q = 0; q < static_cast<int>(rc.entries.size()); ++q) {
        if (m >= rc.entries[q].head && m <= range_end) {
          idx = q;
          break;
        }
        range_end = rc.entries[q].head - 1;
      }
      if (idx <= 0) break;  // no cluster follows (farther than) this one
      const double gap_len =
          work.coord(rc.entries[idx - 1].head) - work.coord(rc.entries[idx].head);
      const double w2 = w + c * tau * gap_len - rc.entries[idx].sigma;
      if (w2 > work.interval(m).max) break;
      if (w2 <= w) {
        // the merge point rounds onto the current weight and the clustering
        // still resolves the tie as unmerged; step one ulp to get past it
        w = std::nextafter(w, std::numeric_limits<double>::infinity());
        continue;
      }
      emit(realize_work(m, w2));
      w = w2;
    }
    emit(realize_work(m, work.interval(m).max));
  }
}

}  // namespace

std::vector<std::vector<double>> brute_critical_set(const PathNetwork& net,
                                                    int y) {
  std::set<std::vector<double>> out;
  brute_family(net, y, Side::Left, out);
  brute_family(net, y, Side::Right, out);
  return {out.begin(), out.end()};
}

}  // namespace pathmedian::oracle
