#pragma once

#include <vector>

#include <Eigen/Core>

namespace ptlab::geom {

// A sampled path in GL+(n,R) from A to B: rotation factors follow the
// geodesic in SO(n), positive-definite factors interpolate linearly, so
// every intermediate matrix keeps positive determinant.
struct GlPath {
    std::vector<Eigen::MatrixXd> samples; // steps + 1 matrices
    double step_bound; // C with max-norm consecutive difference <= C/steps
};

GlPath glplus_path(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, int steps);

// Rotation interpolation helpers (n <= 3).
Eigen::MatrixXd rotation_geodesic(const Eigen::MatrixXd& u0, const Eigen::MatrixXd& u1,
                                  double t);

} // namespace ptlab::geom
