#include "ptlab/preimage/framing.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "ptlab/error.hpp"

namespace ptlab::preimage {

namespace {

// Angle between consecutive frame vectors, used for the continuity invariant.
double vector_angle(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const double c = a.dot(b) / (a.norm() * b.norm());
    return std::acos(std::max(-1.0, std::min(1.0, c)));
}

Eigen::MatrixXd solve_pullback(const Eigen::MatrixXd& jacobian,
                               const Eigen::MatrixXd& nu) {
    // minimum-norm solution lies in the row space, i.e. orthogonal to ker(df)
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(jacobian);
    Eigen::MatrixXd omega = cod.solve(nu);
    const double residual = (jacobian * omega - nu).norm();
    if (!omega.allFinite() || residual > kFrameResidualTol)
        raise(ErrorCode::degenerate_frame,
              "pullback frame residual exceeds tolerance (regularity too weak)");
    return omega;
}

} // namespace

void validate(const FramedPoints& fp) {
    for (const auto& p : fp.points) {
        if (p.x.size() != fp.ambient_dim || p.frame.rows() != fp.ambient_dim ||
            p.frame.cols() != fp.ambient_dim)
            raise(ErrorCode::dimension_mismatch, "framed point has wrong dimensions");
        geom::make_frame(p.frame); // rank check
    }
    for (std::size_t i = 0; i < fp.points.size(); ++i) {
        for (std::size_t j = i + 1; j < fp.points.size(); ++j) {
            if ((fp.points[i].x - fp.points[j].x).norm() < 1e-6)
                raise(ErrorCode::degenerate_frame,
                      "framed points closer than the separation tolerance");
        }
    }
}

void validate(const FramedLoops& fl) {
    for (const auto& comp : fl.components) {
        geom::validate_polyloop(comp.loop);
        if (comp.frames.size() != comp.loop.samples.size())
            raise(ErrorCode::dimension_mismatch, "one frame per loop sample required");
        const std::size_t distinct = comp.loop.samples.size() - 1;
        for (std::size_t i = 0; i < distinct; ++i) {
            const Eigen::MatrixXd& fr = comp.frames[i];
            if (fr.rows() != fl.ambient_dim || fr.cols() != fl.ambient_dim - 1)
                raise(ErrorCode::dimension_mismatch, "loop frame has wrong dimensions");
            geom::make_frame(fr);
            const Eigen::VectorXd tangent = geom::central_tangent(comp.loop, i);
            for (int c = 0; c < fr.cols(); ++c) {
                const double along = std::abs(tangent.dot(fr.col(c)) / fr.col(c).norm());
                if (along > 1e-3)
                    raise(ErrorCode::degenerate_frame,
                          "frame vector is not normal to the loop tangent");
            }
            const Eigen::MatrixXd& next = comp.frames[(i + 1) % distinct];
            for (int c = 0; c < fr.cols(); ++c) {
                if (vector_angle(fr.col(c), next.col(c)) > 0.2)
                    raise(ErrorCode::degenerate_frame,
                          "frame field jumps between consecutive samples");
            }
        }
    }
}

void validate(const PontryaginManifold& p) {
    if (p.k == 0 && !p.empty()) validate(p.points());
    if (p.k == 1 && !p.empty()) validate(p.loops());
}

PontryaginManifold pullback_framing(const dsl::SmoothMap& f, const Eigen::VectorXd& y,
                                    const std::vector<Eigen::VectorXd>& points,
                                    const geom::Frame& nu) {
    PontryaginManifold out;
    out.k = 0;
    out.n = f.codomain_dim();
    out.regular_value = y;
    if (points.empty()) return out;

    FramedPoints fp;
    fp.ambient_dim = f.domain_dim();
    for (const auto& x : points) {
        dsl::Eval e = f.jet(x);
        if (!e.finite())
            raise(ErrorCode::domain_error, "map undefined at a fiber point");
        FramedPoint p;
        p.x = x;
        p.frame = solve_pullback(e.jacobian, nu.vectors);
        fp.points.push_back(std::move(p));
    }
    validate(fp);
    out.payload = std::move(fp);
    return out;
}

PontryaginManifold pullback_framing(const dsl::SmoothMap& f, const Eigen::VectorXd& y,
                                    const std::vector<geom::PolyLoop>& loops,
                                    const geom::Frame& nu) {
    PontryaginManifold out;
    out.k = 1;
    out.n = f.codomain_dim();
    out.regular_value = y;
    if (loops.empty()) return out;

    FramedLoops fl;
    fl.ambient_dim = f.domain_dim();
    for (const auto& loop : loops) {
        FramedLoop comp;
        comp.loop = loop;
        comp.frames.reserve(loop.samples.size());
        for (const auto& x : loop.samples) {
            dsl::Eval e = f.jet(x);
            if (!e.finite())
                raise(ErrorCode::domain_error, "map undefined at a fiber sample");
            comp.frames.push_back(solve_pullback(e.jacobian, nu.vectors));
        }
        // orient the loop so that det[tangent | frame] > 0
        Eigen::MatrixXd basis(fl.ambient_dim, fl.ambient_dim);
        basis.col(0) = geom::central_tangent(comp.loop, 0);
        basis.rightCols(fl.ambient_dim - 1) = comp.frames[0];
        if (basis.determinant() < 0) {
            comp.loop = geom::reversed(comp.loop);
            std::reverse(comp.frames.begin(), comp.frames.end());
        }
        fl.components.push_back(std::move(comp));
    }
    validate(fl);
    out.payload = std::move(fl);
    return out;
}

} // namespace ptlab::preimage
