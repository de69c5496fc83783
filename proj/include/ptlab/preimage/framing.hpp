#pragma once

#include <variant>
#include <vector>

#include <Eigen/Core>

#include "ptlab/dsl/chart_map.hpp"
#include "ptlab/geom/frame.hpp"
#include "ptlab/geom/polyloop.hpp"

namespace ptlab::preimage {

// A 0-dimensional framed submanifold: isolated points of R^n, each carrying
// an n-vector frame (columns).
struct FramedPoint {
    Eigen::VectorXd x;
    Eigen::MatrixXd frame; // n x n
};

struct FramedPoints {
    int ambient_dim = 0;
    std::vector<FramedPoint> points;
};

// A 1-dimensional framed submanifold: loops in R^{n+1} with a per-sample
// n-vector normal frame.
struct FramedLoop {
    geom::PolyLoop loop;
    std::vector<Eigen::MatrixXd> frames; // per sample, (n+1) x n
};

struct FramedLoops {
    int ambient_dim = 0;
    std::vector<FramedLoop> components;
};

struct PontryaginManifold {
    int k = 0;
    int n = 0;
    Eigen::VectorXd regular_value;
    std::variant<std::monostate, FramedPoints, FramedLoops> payload;

    bool empty() const { return std::holds_alternative<std::monostate>(payload); }
    const FramedPoints& points() const { return std::get<FramedPoints>(payload); }
    const FramedLoops& loops() const { return std::get<FramedLoops>(payload); }
};

// Invariant checks (separation, frame rank, tangent-normality, frame-field
// continuity); throw on violation.
void validate(const FramedPoints& fp);
void validate(const FramedLoops& fl);
void validate(const PontryaginManifold& p);

// Pullback framing: at each fiber point the frame vector ω_i is the unique
// solution of df·ω_i = ν_i orthogonal to ker(df). Loops are oriented so that
// det[tangent | frame] > 0 in the ambient orientation.
PontryaginManifold pullback_framing(const dsl::SmoothMap& f, const Eigen::VectorXd& y,
                                    const std::vector<Eigen::VectorXd>& points,
                                    const geom::Frame& nu);
PontryaginManifold pullback_framing(const dsl::SmoothMap& f, const Eigen::VectorXd& y,
                                    const std::vector<geom::PolyLoop>& loops,
                                    const geom::Frame& nu);

// Frame residual bound |df·ω - ν| enforced by the pullback.
inline constexpr double kFrameResidualTol = 1e-9;

} // namespace ptlab::preimage
