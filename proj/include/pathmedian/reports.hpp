#ifndef PATHMEDIAN_REPORTS_HPP
#define PATHMEDIAN_REPORTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "pathmedian/path_network.hpp"
#include "pathmedian/regret_solver.hpp"
#include "pathmedian/scenario_space.hpp"

namespace pathmedian {

// 12 significant digits; identical bytes for identical values.
std::string format_number(double x);

// Coordinates in the reports are translated back to the input frame and all
// indices are 1-based.
std::string solution_report(const PathNetwork& net, const ScenarioUniverse& u,
                            const Solution& sol);

std::string universe_report(const PathNetwork& net, const ScenarioUniverse& u);

// CSV with a header row; samples are (coordinate, max regret) pairs in the
// normalized frame.
std::string curve_csv(const PathNetwork& net,
                      const std::vector<std::pair<double, double>>& samples);

}  // namespace pathmedian

#endif
