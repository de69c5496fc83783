#pragma once

#include <Eigen/Core>

namespace ptlab::geom {

// An ordered set of linearly independent vectors, stored as matrix columns.
// Rank is certified on construction: the smallest singular value of the
// column matrix must be at least 1e-9, else DegenerateFrame.
struct Frame {
    Eigen::MatrixXd vectors; // ambient_dim x count

    int ambient_dim() const { return static_cast<int>(vectors.rows()); }
    int count() const { return static_cast<int>(vectors.cols()); }
};

inline constexpr double kFrameRankTol = 1e-9;

// Validating constructor.
Frame make_frame(const Eigen::MatrixXd& columns);

double min_singular_value(const Eigen::MatrixXd& m);

// Orthonormalizes the input columns (same span, same orientation of the
// leading vectors). DegenerateFrame below the rank tolerance.
Frame gram_schmidt(const Eigen::MatrixXd& columns);

} // namespace ptlab::geom
