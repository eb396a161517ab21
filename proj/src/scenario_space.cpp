#include "pathmedian/scenario_space.hpp"

#include <algorithm>
#include <string>

#include "pathmedian/evacuation.hpp"

namespace pathmedian {

namespace {

Scenario realize(const PathNetwork& net, Side side, int m, double w) {
  const int n = net.size();
  Scenario s;
  s.weights.resize(n);
  for (int l = 0; l < n; ++l) {
    if (l == m) {
      s.weights[l] = w;
    } else if (l < m) {
      s.weights[l] = side == Side::Left ? net.interval(l).max : net.interval(l).min;
    } else {
      s.weights[l] = side == Side::Left ? net.interval(l).min : net.interval(l).max;
    }
  }
  return s;
}

struct FamilyMember {
  int intermediate;
  double weight;
};

struct SweepCluster {
  int head;  // vertex nearest the anchor
  int far;   // vertex farthest from the anchor
  double sigma;
};

// Emits the critical intermediate weights of the left-pseudo-bipartite
// family for one anchor, sweeping intermediates anchor+1..n-1 in ascending
// order. Maintains the anchor's right clusters across the sweep: raising the
// intermediate's weight can only merge the cluster that follows the one
// containing it, so each step is a constant-time closed-form solve.
std::vector<FamilyMember> left_family_sweep(const std::vector<double>& v,
                                            const std::vector<double>& wmin,
                                            const std::vector<double>& wmax,
                                            double c, double tau, int anchor) {
  const int n = static_cast<int>(v.size());
  std::vector<FamilyMember> out;
  if (anchor >= n - 1) return out;

  detail::ClusterSweep sw(c, tau);
  for (int j = n - 1; j > anchor; --j) sw.push(j, -v[j], wmin[j]);
  std::vector<SweepCluster> clusters;
  clusters.reserve(sw.stack().size());
  for (auto it = sw.stack().rbegin(); it != sw.stack().rend(); ++it) {
    clusters.push_back({it->head, it->other_end, it->sigma});
  }

  SweepCluster cur = clusters[0];
  int nxt = 1;
  for (int m = anchor + 1; m < n; ++m) {
    double omega = wmin[m];
    bool emitted = false;
    if (m == anchor + 1) {
      out.push_back({m, omega});
      emitted = true;
    }
    while (m > cur.far) cur = clusters[nxt++];
    for (;;) {
      if (nxt < static_cast<int>(clusters.size())) {
        const double w =
            omega + c * tau * (v[clusters[nxt].head] - v[cur.head]) - cur.sigma;
        if (w <= wmax[m]) {
          if (w > omega) {
            out.push_back({m, w});
            emitted = true;
          }
          cur.sigma += (w - omega) + clusters[nxt].sigma;
          cur.far = clusters[nxt].far;
          ++nxt;
          omega = w;
          if (w == wmax[m]) {
            if (!emitted) out.push_back({m, w});
            break;
          }
          continue;
        }
      }
      if (omega < wmax[m] || !emitted) {
        cur.sigma += wmax[m] - omega;
        out.push_back({m, wmax[m]});
      }
      break;
    }
  }
  return out;
}

}  // namespace

Scenario bipartite(const PathNetwork& net, Side side, int i) {
  if (i < 0 || i > net.size() - 2) {
    throw ValidationError("bipartite split index out of range");
  }
  Scenario s;
  s.weights.resize(net.size());
  for (int l = 0; l < net.size(); ++l) {
    const bool prefix = l <= i;
    const bool takes_max = (side == Side::Left) == prefix;
    s.weights[l] = takes_max ? net.interval(l).max : net.interval(l).min;
  }
  return s;
}

Scenario pseudo_bipartite(const PathNetwork& net,
                          const PseudoBipartiteSpec& spec) {
  const int m = spec.intermediate;
  if (m < 0 || m >= net.size()) {
    throw ValidationError("intermediate vertex index out of range");
  }
  const auto& iv = net.interval(m);
  if (spec.weight < iv.min || spec.weight > iv.max) {
    throw ValidationError("intermediate weight out of interval at vertex " +
                          std::to_string(m + 1));
  }
  return realize(net, spec.side, m, spec.weight);
}

CriticalScenarioSet critical_set_for_vertex(const PathNetwork& net, int y) {
  const int n = net.size();
  CriticalScenarioSet out;
  out.anchor = y;

  std::vector<double> wmin(n), wmax(n);
  for (int i = 0; i < n; ++i) {
    wmin[i] = net.interval(i).min;
    wmax[i] = net.interval(i).max;
  }

  for (const auto& f :
       left_family_sweep(net.coords(), wmin, wmax, net.capacity(), net.tau(), y)) {
    out.members.push_back({{Side::Left, f.intermediate, f.weight},
                           realize(net, Side::Left, f.intermediate, f.weight)});
  }

  // Right family: run the same sweep on the mirror image.
  std::vector<double> rv(n), rmin(n), rmax(n);
  for (int i = 0; i < n; ++i) {
    rv[i] = -net.coord(n - 1 - i);
    rmin[i] = wmin[n - 1 - i];
    rmax[i] = wmax[n - 1 - i];
  }
  for (const auto& f :
       left_family_sweep(rv, rmin, rmax, net.capacity(), net.tau(), n - 1 - y)) {
    const int m = n - 1 - f.intermediate;
    out.members.push_back(
        {{Side::Right, m, f.weight}, realize(net, Side::Right, m, f.weight)});
  }
  return out;
}

ScenarioUniverse universe(const PathNetwork& net) {
  std::vector<UniverseMember> all;
  for (int y = 0; y < net.size(); ++y) {
    CriticalScenarioSet set = critical_set_for_vertex(net, y);
    for (auto& mem : set.members) {
      all.push_back({y, mem.spec, std::move(mem.scenario)});
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const UniverseMember& a, const UniverseMember& b) {
                     if (a.anchor != b.anchor) return a.anchor < b.anchor;
                     if (a.spec.side != b.spec.side)
                       return a.spec.side == Side::Left;
                     if (a.spec.intermediate != b.spec.intermediate)
                       return a.spec.intermediate < b.spec.intermediate;
                     return a.spec.weight < b.spec.weight;
                   });
  // dedup by exact weight-vector equality, keeping the first in canonical
  // order; done via an index sort to avoid copying the vectors
  std::vector<std::size_t> idx(all.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (all[a].scenario.weights != all[b].scenario.weights) {
      return all[a].scenario.weights < all[b].scenario.weights;
    }
    return a < b;
  });
  std::vector<char> keep(all.size(), 0);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 ||
        all[idx[i]].scenario.weights != all[idx[i - 1]].scenario.weights) {
      keep[idx[i]] = 1;
    }
  }
  ScenarioUniverse out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (keep[i]) out.members.push_back(std::move(all[i]));
  }
  return out;
}

}  // namespace pathmedian
