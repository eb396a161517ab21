#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pathmedian/evacuation.hpp"
#include "pathmedian/oracle.hpp"
#include "pathmedian/random_instance.hpp"
#include "pathmedian/regret_solver.hpp"
#include "pathmedian/reports.hpp"
#include "pathmedian/scenario_space.hpp"

namespace pm = pathmedian;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pm::ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& output_path, const std::string& text) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw pm::ParseError("cannot open " + output_path + " for writing");
  out << text;
}

std::vector<double> parse_weight_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const double w = std::stod(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw pm::ParseError("bad weight list entry: " + item);
    out.push_back(w);
  }
  if (out.empty()) throw pm::ParseError("empty weight list");
  return out;
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool clusters_equal(const pm::ClusterSequence& a, const pm::ClusterSequence& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].head != b.entries[i].head ||
        a.entries[i].sigma != b.entries[i].sigma) {
      return false;
    }
  }
  return true;
}

// Cross-checks formulas against the independent engines. Returns the number
// of violations, reporting each to stderr.
int oracle_check(const pm::PathNetwork& net, int grid) {
  int violations = 0;
  auto fail = [&](const std::string& what) {
    std::cerr << "oracle violation: " << what << "\n";
    ++violations;
  };

  const pm::ScenarioUniverse u = pm::universe(net);

  std::vector<pm::Scenario> scenarios{net.min_weights(), net.max_weights()};
  for (std::size_t i = 0; i < u.members.size() && scenarios.size() < 22; ++i) {
    scenarios.push_back(u.members[i].scenario);
  }

  std::vector<double> points(net.coords());
  for (int e = 0; e < net.num_edges(); ++e) {
    points.push_back((net.coord(e) + net.coord(e + 1)) / 2.0);
  }

  for (const pm::Scenario& s : scenarios) {
    for (double x : points) {
      const double formula = pm::cost(net, s, x);
      const double simulated = pm::oracle::simulate_cost(net, s, x);
      if (!close_rel(formula, simulated, 1e-9)) {
        fail("cost mismatch at x=" + pm::format_number(x + net.offset()) +
             ": formula " + pm::format_number(formula) + ", simulation " +
             pm::format_number(simulated));
      }
      const pm::PointOnPath p = pm::locate(net, x);
      if (!clusters_equal(pm::left_clusters(net, s, p),
                          pm::oracle::brute_clusters(net, s, p,
                                                     pm::Direction::Left)) ||
          !clusters_equal(pm::right_clusters(net, s, p),
                          pm::oracle::brute_clusters(net, s, p,
                                                     pm::Direction::Right))) {
        fail("cluster mismatch at x=" + pm::format_number(x + net.offset()));
      }
    }
  }

  for (int y = 0; y < net.size(); ++y) {
    const pm::CriticalScenarioSet set = pm::critical_set_for_vertex(net, y);
    std::vector<std::vector<double>> sweep;
    for (const auto& mem : set.members) sweep.push_back(mem.scenario.weights);
    std::sort(sweep.begin(), sweep.end());
    sweep.erase(std::unique(sweep.begin(), sweep.end()), sweep.end());
    const auto brute = pm::oracle::brute_critical_set(net, y);
    bool same = sweep.size() == brute.size();
    for (std::size_t i = 0; same && i < sweep.size(); ++i) {
      for (std::size_t j = 0; j < sweep[i].size(); ++j) {
        if (!close_rel(sweep[i][j], brute[i][j], 1e-12)) same = false;
      }
    }
    if (!same) {
      fail("critical set mismatch at vertex " + std::to_string(y + 1) + ": " +
           std::to_string(sweep.size()) + " vs " + std::to_string(brute.size()) +
           " members");
    }
  }

  if (net.size() <= 8) {
    const pm::Solution sol = pm::solve(net, u);
    const double step = std::max(net.span(), 1.0) * 1e-3;
    const auto [ox, oval] = pm::oracle::exhaustive_solve(net, step, grid);
    (void)ox;
    if (std::abs(sol.value - oval) > 1e-5) {
      fail("solve value " + pm::format_number(sol.value) +
           " differs from exhaustive search " + pm::format_number(oval));
    }
    const double at_solver =
        pm::oracle::sampled_max_regret(net, sol.x_star.coordinate, grid);
    if (at_solver > oval + 1e-5) {
      fail("max regret at reported optimum exceeds exhaustive optimum");
    }
  }

  return violations;
}

int run_bench(const std::vector<int>& sizes, std::uint64_t seed) {
  std::cout << "n,median_seconds\n";
  for (int n : sizes) {
    std::vector<double> times;
    for (int k = 0; k < 5; ++k) {
      pm::Rng rng(seed + static_cast<std::uint64_t>(k) * 7919 + n);
      const pm::PathNetwork net = pm::random_network(rng, n);
      const auto start = std::chrono::steady_clock::now();
      const pm::Solution sol = pm::solve(net);
      const auto stop = std::chrono::steady_clock::now();
      if (sol.value < 0) return 3;  // keeps the solve from being optimized out
      times.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::sort(times.begin(), times.end());
    std::cout << n << "," << pm::format_number(times[times.size() / 2]) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimax regret 1-median solver for dynamic path networks"};
  app.require_subcommand(1);

  std::string input, output, scenario_text;
  double at = 0.0;
  int samples = 100;
  int grid = 50;
  std::vector<int> bench_sizes{50, 100, 200};
  std::uint64_t seed = 1;

  auto* c_validate = app.add_subcommand("validate", "parse and validate an instance");
  c_validate->add_option("file", input)->required();

  auto* c_cost = app.add_subcommand("cost", "total evacuation time at a point");
  c_cost->add_option("file", input)->required();
  c_cost->add_option("--scenario", scenario_text, "comma-separated weights")->required();
  c_cost->add_option("--at", at, "sink coordinate (input frame)")->required();

  auto* c_median = app.add_subcommand("median", "best sink vertex for one scenario");
  c_median->add_option("file", input)->required();
  c_median->add_option("--scenario", scenario_text)->required();

  auto* c_scen = app.add_subcommand("scenarios", "dump the critical scenario universe");
  c_scen->add_option("file", input)->required();
  c_scen->add_option("-o,--output", output);

  auto* c_solve = app.add_subcommand("solve", "minimax regret median");
  c_solve->add_option("file", input)->required();
  c_solve->add_option("-o,--output", output);

  auto* c_curve = app.add_subcommand("curve", "max-regret curve as CSV");
  c_curve->add_option("file", input)->required();
  c_curve->add_option("--samples", samples)->check(CLI::PositiveNumber);
  c_curve->add_option("-o,--output", output);

  auto* c_oracle = app.add_subcommand("oracle-check", "cross-check against the oracle engines");
  c_oracle->add_option("file", input)->required();
  c_oracle->add_option("--grid", grid)->check(CLI::PositiveNumber);

  auto* c_bench = app.add_subcommand("bench", "wall-time table for solve on random instances");
  c_bench->add_option("--n", bench_sizes, "instance sizes");
  c_bench->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_bench->parsed()) return run_bench(bench_sizes, seed);

    const pm::PathNetwork net = pm::PathNetwork::parse(read_file(input));

    if (c_validate->parsed()) {
      std::cout << "ok: " << net.size() << " vertices, " << net.num_edges()
                << " edges\n";
      return 0;
    }
    if (c_cost->parsed()) {
      const pm::Scenario s =
          pm::make_scenario(net, parse_weight_list(scenario_text));
      std::cout << pm::format_number(pm::cost(net, s, at - net.offset()))
                << "\n";
      return 0;
    }
    if (c_median->parsed()) {
      const pm::Scenario s =
          pm::make_scenario(net, parse_weight_list(scenario_text));
      const pm::MedianResult m = pm::median(net, s);
      std::cout << "{\"vertex\": " << m.vertex + 1
                << ", \"cost\": " << pm::format_number(m.cost) << "}\n";
      return 0;
    }
    if (c_scen->parsed()) {
      emit(output, pm::universe_report(net, pm::universe(net)));
      return 0;
    }
    if (c_solve->parsed()) {
      const pm::ScenarioUniverse u = pm::universe(net);
      emit(output, pm::solution_report(net, u, pm::solve(net, u)));
      return 0;
    }
    if (c_curve->parsed()) {
      const pm::ScenarioUniverse u = pm::universe(net);
      emit(output, pm::curve_csv(net, pm::regret_curve(net, u, samples)));
      return 0;
    }
    if (c_oracle->parsed()) {
      const int violations = oracle_check(net, grid);
      if (violations > 0) {
        std::cerr << violations << " oracle violation(s)\n";
        return 3;
      }
      std::cout << "ok\n";
      return 0;
    }
  } catch (const pm::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pm::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
