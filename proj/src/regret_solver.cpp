#include "pathmedian/regret_solver.hpp"

#include <algorithm>
#include <limits>

#include "pathmedian/evacuation.hpp"

namespace pathmedian {

double regret(const PathNetwork& net, const Scenario& s, double x) {
  return cost(net, s, x) - median(net, s).cost;
}

double gap(const PathNetwork& net, const Scenario& s, double x, double y) {
  return cost(net, s, x) - cost(net, s, y);
}

namespace {

double intersect_x(const RegretLine& p, const RegretLine& q) {
  return (p.offset - q.offset) / (q.slope - p.slope);
}

// Lines of the upper envelope, sorted by slope. Parallel lines keep the
// larger offset; exact duplicates keep the smallest scenario id.
std::vector<RegretLine> upper_hull(std::vector<RegretLine> lines) {
  std::sort(lines.begin(), lines.end(),
            [](const RegretLine& a, const RegretLine& b) {
              if (a.slope != b.slope) return a.slope < b.slope;
              if (a.offset != b.offset) return a.offset < b.offset;
              return a.scenario > b.scenario;
            });
  std::vector<RegretLine> hull;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i + 1 < lines.size() && lines[i + 1].slope == lines[i].slope) continue;
    const RegretLine& l = lines[i];
    while (hull.size() >= 2 &&
           intersect_x(hull.back(), l) <=
               intersect_x(hull[hull.size() - 2], hull.back())) {
      hull.pop_back();
    }
    hull.push_back(l);
  }
  return hull;
}

struct EnvelopeAccumulator {
  std::vector<RegretLine> lines;
  std::size_t cap = 1024;

  void add(const RegretLine& l) {
    lines.push_back(l);
    if (lines.size() > cap) {
      lines = upper_hull(std::move(lines));
      cap = std::max<std::size_t>(1024, lines.size() * 2);
    }
  }
};

}  // namespace

EnvelopeResult envelope_min_max(std::span<const RegretLine> lines, double lo,
                                double hi) {
  if (lines.empty()) throw ValidationError("empty line set");
  if (lo > hi) throw ValidationError("empty interval");
  const std::vector<RegretLine> hull =
      upper_hull(std::vector<RegretLine>(lines.begin(), lines.end()));
  std::vector<double> breaks;
  breaks.reserve(hull.size() - 1);
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    breaks.push_back(intersect_x(hull[k], hull[k + 1]));
  }

  auto eval = [&](double x) {
    const std::size_t k =
        std::upper_bound(breaks.begin(), breaks.end(), x) - breaks.begin();
    double best = hull[k].slope * x + hull[k].offset;
    int id = hull[k].scenario;
    auto consider = [&](std::size_t j) {
      const double v = hull[j].slope * x + hull[j].offset;
      if (v > best || (v == best && hull[j].scenario < id)) {
        best = v;
        id = hull[j].scenario;
      }
    };
    if (k > 0) consider(k - 1);
    if (k + 1 < hull.size()) consider(k + 1);
    return std::pair<double, int>(best, id);
  };

  EnvelopeResult out;
  out.x = lo;
  std::tie(out.value, out.line) = eval(lo);
  auto try_candidate = [&](double x) {
    const auto [v, id] = eval(x);
    if (v < out.value) {
      out.x = x;
      out.value = v;
      out.line = id;
    }
  };
  for (double b : breaks) {
    if (b > lo && b < hi) try_candidate(b);
  }
  if (hi > lo) try_candidate(hi);
  return out;
}

std::vector<VertexRegret> max_regret_at_vertices(const PathNetwork& net,
                                                 const ScenarioUniverse& u) {
  const int n = net.size();
  std::vector<VertexRegret> out(n);
  for (auto& vr : out) vr.r_max = 0.0;
  if (u.members.empty()) return out;
  for (auto& vr : out) vr.r_max = -std::numeric_limits<double>::infinity();
  for (std::size_t si = 0; si < u.members.size(); ++si) {
    const std::vector<double> vc = vertex_costs_all(net, u.members[si].scenario);
    const double mc = *std::min_element(vc.begin(), vc.end());
    for (int i = 0; i < n; ++i) {
      const double r = vc[i] - mc;
      if (r > out[i].r_max) {
        out[i].r_max = r;
        out[i].witness = static_cast<int>(si);
      }
    }
  }
  return out;
}

EdgeMin min_max_regret_on_edge(const PathNetwork& net,
                               const ScenarioUniverse& u, int edge_index) {
  std::vector<RegretLine> lines;
  lines.reserve(u.members.size());
  for (std::size_t si = 0; si < u.members.size(); ++si) {
    const Scenario& s = u.members[si].scenario;
    const EdgeCostLine l = edge_lines(net, s)[edge_index];
    lines.push_back(
        {l.slope, l.intercept - median(net, s).cost, static_cast<int>(si)});
  }
  const EnvelopeResult env = envelope_min_max(
      lines, net.coord(edge_index), net.coord(edge_index + 1));
  return {edge_index, env.x, env.value, env.line};
}

namespace {

struct Candidate {
  double value;
  double x;
  bool is_vertex;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.x != b.x) return a.x < b.x;
  return a.is_vertex && !b.is_vertex;
}

}  // namespace

Solution solve(const PathNetwork& net, const ScenarioUniverse& u) {
  const int n = net.size();
  Solution sol;
  if (n == 1 || u.members.empty()) {
    sol.x_star = locate(net, net.coord(0));
    sol.value = 0.0;
    sol.vertex_report.assign(n, VertexRegret{0.0, -1});
    return sol;
  }

  const std::size_t m = u.members.size();
  std::vector<double> medcost(m);
  sol.vertex_report.assign(
      n, VertexRegret{-std::numeric_limits<double>::infinity(), -1});
  std::vector<EnvelopeAccumulator> acc(n - 1);

  for (std::size_t si = 0; si < m; ++si) {
    const Scenario& s = u.members[si].scenario;
    const std::vector<double> vc = vertex_costs_all(net, s);
    const double mc = *std::min_element(vc.begin(), vc.end());
    medcost[si] = mc;
    for (int i = 0; i < n; ++i) {
      const double r = vc[i] - mc;
      if (r > sol.vertex_report[i].r_max) {
        sol.vertex_report[i].r_max = r;
        sol.vertex_report[i].witness = static_cast<int>(si);
      }
    }
    const std::vector<EdgeCostLine> lines = edge_lines(net, s);
    for (int e = 0; e < n - 1; ++e) {
      acc[e].add({lines[e].slope, lines[e].intercept - mc,
                  static_cast<int>(si)});
    }
  }

  sol.edge_report.reserve(n - 1);
  for (int e = 0; e < n - 1; ++e) {
    const EnvelopeResult env =
        envelope_min_max(acc[e].lines, net.coord(e), net.coord(e + 1));
    sol.edge_report.push_back({e, env.x, env.value, env.line});
  }

  Candidate best{sol.vertex_report[0].r_max, net.coord(0), true};
  int best_witness = sol.vertex_report[0].witness;
  for (int i = 1; i < n; ++i) {
    Candidate cand{sol.vertex_report[i].r_max, net.coord(i), true};
    if (better(cand, best)) {
      best = cand;
      best_witness = sol.vertex_report[i].witness;
    }
  }
  for (const EdgeMin& em : sol.edge_report) {
    Candidate cand{em.value, em.x, false};
    if (better(cand, best)) {
      best = cand;
      best_witness = em.witness;
    }
  }

  sol.x_star = locate(net, best.x);
  sol.value = best.value;
  sol.witness = best_witness;
  sol.witness_member = u.members[best_witness];
  return sol;
}

Solution solve(const PathNetwork& net) { return solve(net, universe(net)); }

std::vector<std::pair<double, double>> regret_curve(const PathNetwork& net,
                                                    const ScenarioUniverse& u,
                                                    int samples) {
  std::vector<double> xs(net.coords());
  if (samples >= 2 && net.size() >= 2) {
    const double span = net.span();
    for (int k = 0; k < samples; ++k) {
      xs.push_back(span * k / (samples - 1));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<double> medcost(u.members.size());
  for (std::size_t si = 0; si < u.members.size(); ++si) {
    medcost[si] = median(net, u.members[si].scenario).cost;
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(xs.size());
  for (double x : xs) {
    double r = 0.0;
    for (std::size_t si = 0; si < u.members.size(); ++si) {
      r = std::max(r, cost(net, u.members[si].scenario, x) - medcost[si]);
    }
    out.emplace_back(x, r);
  }
  return out;
}

}  // namespace pathmedian
