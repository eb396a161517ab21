#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "pathmedian/evacuation.hpp"
#include "pathmedian/oracle.hpp"
#include "pathmedian/random_instance.hpp"

using namespace pathmedian;

namespace {

bool clusters_equal(const ClusterSequence& a, const ClusterSequence& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].head != b.entries[i].head ||
        a.entries[i].sigma != b.entries[i].sigma) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("left clusters of the canonical fixture") {
  const PathNetwork net = fixtures::a();
  const Scenario s = fixtures::ones3();
  const ClusterSequence seq = left_clusters(net, s, locate(net, 3.5));
  REQUIRE(seq.entries.size() == 2);
  CHECK(seq.entries[0].head == 0);
  CHECK(seq.entries[0].sigma == 1.0);
  CHECK(seq.entries[1].head == 1);
  CHECK(seq.entries[1].sigma == 1.0);
}

TEST_CASE("equal pull merges into the later head") {
  // both vertices reach the tie value, so the nearer one heads the cluster
  const PathNetwork net = PathNetwork({0.0, 1.0, 2.0},
                                      {{1, 1}, {1, 1}, {1, 1}}, 1.0, 1.0);
  const Scenario s = {{1.0, 1.0, 1.0}};
  const ClusterSequence seq = left_clusters(net, s, locate(net, 2.0));
  REQUIRE(seq.entries.size() == 1);
  CHECK(seq.entries[0].head == 1);
  CHECK(seq.entries[0].sigma == 2.0);
}

TEST_CASE("nothing lies left of the first vertex") {
  const PathNetwork net = fixtures::a();
  const ClusterSequence seq =
      left_clusters(net, fixtures::ones3(), locate(net, 0.0));
  CHECK(seq.entries.empty());
}

TEST_CASE("right clusters mirror the left ones") {
  const PathNetwork net = fixtures::a();
  const Scenario s = fixtures::ones3();
  const ClusterSequence seq = right_clusters(net, s, locate(net, 0.5));
  REQUIRE(seq.entries.size() == 1);
  CHECK(seq.entries[0].head == 1);
  CHECK(seq.entries[0].sigma == 2.0);
  CHECK(right_clusters(net, s, locate(net, 4.0)).entries.empty());

  const PathNetwork two = PathNetwork({0.0, 3.0}, {{1, 1}, {1, 1}}, 1.0, 1.0);
  const ClusterSequence remote =
      right_clusters(two, Scenario{{1.0, 1.0}}, locate(two, 0.0));
  REQUIRE(remote.entries.size() == 1);
  CHECK(remote.entries[0].head == 1);
  CHECK(remote.entries[0].sigma == 1.0);
}

TEST_CASE("one-sided costs of the canonical fixture") {
  const PathNetwork net = fixtures::a();
  const Scenario s = fixtures::ones3();
  CHECK(cost_left(net, s, 3.5) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(cost_left(net, s, 0.0) == 0.0);
  CHECK(cost_right(net, s, 4.0) == 0.0);
  CHECK(cost_right(net, s, 0.5) == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(cost_right(net, s, 3.0) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(cost(net, s, 3.0) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(cost(net, s, 3.5) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(cost(net, s, 0.0) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("vertex cost table matches pointwise evaluation") {
  const PathNetwork net = fixtures::a();
  const std::vector<double> table = vertex_costs_all(net, fixtures::ones3());
  REQUIRE(table.size() == 3);
  CHECK(table[0] == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(table[1] == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(table[2] == doctest::Approx(6.0).epsilon(1e-12));

  const PathNetwork single = PathNetwork({2.0}, {{1, 1}}, 1.0, 1.0);
  CHECK(vertex_costs_all(single, Scenario{{1.0}}) ==
        std::vector<double>{0.0});

  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const PathNetwork r = random_network(rng, 1 + rng.pick(8));
    const Scenario s = random_scenario(rng, r);
    const std::vector<double> all = vertex_costs_all(r, s);
    for (int i = 0; i < r.size(); ++i) {
      CHECK(all[i] == doctest::Approx(cost(r, s, r.coord(i))).epsilon(1e-12));
    }
  }
}

TEST_CASE("edge lines reproduce the cost on open edges") {
  const PathNetwork net = fixtures::a();
  const std::vector<EdgeCostLine> lines = edge_lines(net, fixtures::ones3());
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].slope == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(lines[0].intercept == doctest::Approx(8.5).epsilon(1e-12));
  CHECK(lines[1].slope == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lines[1].intercept == doctest::Approx(2.5).epsilon(1e-12));

  Rng rng(13);
  for (int t = 0; t < 60; ++t) {
    const PathNetwork r = random_network(rng, 2 + rng.pick(7));
    const Scenario s = random_scenario(rng, r);
    const std::vector<EdgeCostLine> ls = edge_lines(r, s);
    for (int e = 0; e < r.num_edges(); ++e) {
      for (int k = 1; k <= 5; ++k) {
        const double x = r.coord(e) + r.edge_length(e) * k / 6.0;
        const double via_line = ls[e].slope * x + ls[e].intercept;
        CHECK(std::abs(via_line - cost(r, s, x)) <=
              1e-9 * std::max(1.0, std::abs(via_line)));
      }
    }
  }
}

TEST_CASE("edge slope is tau times the supply imbalance") {
  const PathNetwork net =
      PathNetwork({0.0, 1.0, 5.0}, {{2, 2}, {3, 3}, {0.5, 0.5}}, 1.0, 2.0);
  const Scenario s = {{2.0, 3.0, 0.5}};
  const std::vector<EdgeCostLine> lines = edge_lines(net, s);
  CHECK(lines[1].slope ==
        doctest::Approx(2.0 * (2.0 + 3.0) - 2.0 * 0.5).epsilon(1e-12));
}

TEST_CASE("median picks the cheapest vertex, earliest on ties") {
  const PathNetwork net = fixtures::a();
  const MedianResult m = median(net, fixtures::ones3());
  CHECK(m.vertex == 1);
  CHECK(m.cost == doctest::Approx(5.0).epsilon(1e-12));

  const PathNetwork single = PathNetwork({0.0}, {{1, 1}}, 1.0, 1.0);
  CHECK(median(single, Scenario{{1.0}}).vertex == 0);
  CHECK(median(single, Scenario{{1.0}}).cost == 0.0);

  const PathNetwork sym = PathNetwork({0.0, 1.0}, {{1, 1}, {1, 1}}, 1.0, 1.0);
  const MedianResult tied = median(sym, Scenario{{1.0, 1.0}});
  CHECK(tied.vertex == 0);
  CHECK(tied.cost == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("cluster invariants hold on random instances") {
  Rng rng(17);
  for (int t = 0; t < 80; ++t) {
    const PathNetwork net = random_network(rng, 1 + rng.pick(8));
    const Scenario s = random_scenario(rng, net);
    const PointOnPath x = locate(net, random_point(rng, net));
    for (Direction dir : {Direction::Left, Direction::Right}) {
      const ClusterSequence seq = dir == Direction::Left
                                      ? left_clusters(net, s, x)
                                      : right_clusters(net, s, x);
      CHECK(clusters_equal(seq, oracle::brute_clusters(net, s, x, dir)));

      double covered = 0.0;
      for (int j = seq.range_begin; j <= seq.range_end; ++j) {
        covered += s.weights[j];
      }
      double total = 0.0;
      for (const Cluster& cl : seq.entries) {
        CHECK(cl.sigma > 0.0);
        total += cl.sigma;
      }
      CHECK(total == doctest::Approx(covered).epsilon(1e-12));

      // strict separation between consecutive clusters
      for (std::size_t i = 1; i < seq.entries.size(); ++i) {
        const double gap_len =
            std::abs(net.coord(seq.entries[i].head) -
                     net.coord(seq.entries[i - 1].head));
        CHECK(net.tau() * gap_len > seq.entries[i].sigma / net.capacity());
      }
    }
  }
}

TEST_CASE("formula agrees with the flow simulation") {
  Rng rng(19);
  for (int t = 0; t < 80; ++t) {
    const PathNetwork net = random_network(rng, 1 + rng.pick(8));
    const Scenario s = random_scenario(rng, net);
    const double x = random_point(rng, net);
    const double formula = cost(net, s, x);
    const double simulated = oracle::simulate_cost(net, s, x);
    CHECK(std::abs(formula - simulated) <=
          1e-9 * std::max(1.0, std::abs(formula)));
  }
}

TEST_CASE("no interior point beats the median") {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const PathNetwork net = random_network(rng, 2 + rng.pick(7));
    const Scenario s = random_scenario(rng, net);
    const MedianResult m = median(net, s);
    const double step = net.min_edge_length() / 1000.0;
    double grid_min = m.cost;
    for (double x = 0.0; x <= net.span(); x += step) {
      grid_min = std::min(grid_min, cost(net, s, x));
    }
    CHECK(grid_min >= m.cost - 1e-9 * std::max(1.0, m.cost));
  }
}

TEST_CASE("edge line limits never undercut the vertex value") {
  Rng rng(29);
  for (int t = 0; t < 40; ++t) {
    const PathNetwork net = random_network(rng, 3 + rng.pick(5));
    const Scenario s = random_scenario(rng, net);
    const std::vector<double> table = vertex_costs_all(net, s);
    const std::vector<EdgeCostLine> lines = edge_lines(net, s);
    for (int i = 1; i + 1 < net.size(); ++i) {
      const double from_left =
          lines[i - 1].slope * net.coord(i) + lines[i - 1].intercept;
      const double from_right =
          lines[i].slope * net.coord(i) + lines[i].intercept;
      const double slack = 1e-9 * std::max(1.0, table[i]);
      CHECK(from_left >= table[i] - slack);
      CHECK(from_right >= table[i] - slack);
    }
  }
}
