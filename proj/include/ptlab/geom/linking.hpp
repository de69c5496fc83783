#pragma once

#include "ptlab/geom/polyloop.hpp"

namespace ptlab::geom {

inline constexpr double kLoopSeparationTol = 1e-3;

// Discretized Gauss linking integral of two disjoint closed loops in R^3,
// midpoint rule per segment pair. Symmetric; near-integer for well-separated
// loops at 512+ segments. Orientation follows sample order, sign follows the
// right-handed orientation of R^3.
double gauss_linking(const PolyLoop& a, const PolyLoop& b);

} // namespace ptlab::geom
