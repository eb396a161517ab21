#ifndef PATHMEDIAN_TESTS_FIXTURES_HPP
#define PATHMEDIAN_TESTS_FIXTURES_HPP

#include "pathmedian/path_network.hpp"

namespace fixtures {

// coords (0, 3, 4), tau = c = 1, all intervals degenerate at 1
inline pathmedian::PathNetwork a() {
  return pathmedian::PathNetwork({0.0, 3.0, 4.0},
                                 {{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}}, 1.0,
                                 1.0);
}

// like a(), but the middle vertex is uncertain in [0.5, 2]
inline pathmedian::PathNetwork b() {
  return pathmedian::PathNetwork({0.0, 3.0, 4.0},
                                 {{1.0, 1.0}, {0.5, 2.0}, {1.0, 1.0}}, 1.0,
                                 1.0);
}

inline pathmedian::Scenario ones3() { return {{1.0, 1.0, 1.0}}; }

}  // namespace fixtures

#endif
