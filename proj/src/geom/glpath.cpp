#include "ptlab/geom/glpath.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "ptlab/error.hpp"

namespace ptlab::geom {

namespace {

// Polar decomposition M = U P with U special orthogonal (det M > 0 assumed)
// and P symmetric positive definite.
void polar(const Eigen::MatrixXd& m, Eigen::MatrixXd& u, Eigen::MatrixXd& p) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    u = svd.matrixU() * svd.matrixV().transpose();
    p = svd.matrixV() * svd.singularValues().asDiagonal() * svd.matrixV().transpose();
}

Eigen::Matrix3d skew(const Eigen::Vector3d& w) {
    Eigen::Matrix3d k;
    k << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
    return k;
}

Eigen::Matrix3d rodrigues(const Eigen::Vector3d& axis, double angle) {
    const Eigen::Matrix3d k = skew(axis);
    return Eigen::Matrix3d::Identity() + std::sin(angle) * k +
           (1.0 - std::cos(angle)) * (k * k);
}

// Axis-angle of R in SO(3), robust near angle pi.
void so3_log(const Eigen::Matrix3d& r, Eigen::Vector3d& axis, double& angle) {
    double c = (r.trace() - 1.0) / 2.0;
    c = std::max(-1.0, std::min(1.0, c));
    angle = std::acos(c);
    if (angle < 1e-12) {
        axis = Eigen::Vector3d::UnitX();
        angle = 0.0;
        return;
    }
    if (angle > M_PI - 1e-6) {
        const Eigen::Matrix3d b = 0.5 * (r + Eigen::Matrix3d::Identity());
        int i = 0;
        b.diagonal().maxCoeff(&i);
        Eigen::Vector3d v;
        v[i] = std::sqrt(std::max(b(i, i), 0.0));
        for (int j = 0; j < 3; ++j)
            if (j != i) v[j] = b(i, j) / v[i];
        axis = v.normalized();
        return;
    }
    Eigen::Vector3d w(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
    axis = w / (2.0 * std::sin(angle));
}

} // namespace

Eigen::MatrixXd rotation_geodesic(const Eigen::MatrixXd& u0, const Eigen::MatrixXd& u1,
                                  double t) {
    const int n = static_cast<int>(u0.rows());
    if (n == 1) return Eigen::MatrixXd::Identity(1, 1);
    if (n == 2) {
        const Eigen::MatrixXd r = u0.transpose() * u1;
        const double theta = std::atan2(r(1, 0), r(0, 0));
        Eigen::Matrix2d rt;
        const double a = t * theta;
        rt << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
        return u0 * rt;
    }
    if (n == 3) {
        const Eigen::Matrix3d r = (u0.transpose() * u1).eval();
        Eigen::Vector3d axis;
        double angle = 0.0;
        so3_log(r, axis, angle);
        return u0 * rodrigues(axis, t * angle);
    }
    raise(ErrorCode::unsupported_dimension, "rotation interpolation supports n <= 3");
}

GlPath glplus_path(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, int steps) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        raise(ErrorCode::dimension_mismatch, "path endpoints must be square, same size");
    if (steps < 1) raise(ErrorCode::budget_exhausted, "need at least one step");
    if (a.determinant() <= 0.0 || b.determinant() <= 0.0)
        raise(ErrorCode::orientation_mismatch,
              "both endpoints must have positive determinant");

    Eigen::MatrixXd ua, pa, ub, pb;
    polar(a, ua, pa);
    polar(b, ub, pb);

    GlPath path;
    path.samples.reserve(steps + 1);
    path.samples.push_back(a);
    for (int i = 1; i < steps; ++i) {
        const double t = static_cast<double>(i) / steps;
        const Eigen::MatrixXd p = (1.0 - t) * pa + t * pb;
        path.samples.push_back(rotation_geodesic(ua, ub, t) * p);
    }
    path.samples.push_back(b);

    double max_diff = 0.0;
    for (std::size_t i = 0; i + 1 < path.samples.size(); ++i) {
        const double diff =
            (path.samples[i + 1] - path.samples[i]).cwiseAbs().maxCoeff();
        max_diff = std::max(max_diff, diff);
    }
    path.step_bound = max_diff * steps;
    return path;
}

} // namespace ptlab::geom
