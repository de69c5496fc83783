#pragma once

#include <string>
#include <vector>

#include "ptlab/dsl/chart_map.hpp"

namespace ptlab::dsl {

// Named map zoo. Accepted names:
//   identity:n          the identity chart map on R^n
//   winding:d           chart form of z -> z^d on the circle (d != 0)
//   reflection:n        negates the last coordinate of R^n
//   constant-inf:n,k    the constant basepoint map R^{n+k} -> {∞}
//   hopf                chart form of the Hopf map R^3 -> R^2
// winding:0 is the constant-∞ map of matching dimensions.
MapPtr builtin_map(const std::string& name);

// Canonical instances exercised by the numeric-hygiene suites.
std::vector<std::string> builtin_zoo();

} // namespace ptlab::dsl
