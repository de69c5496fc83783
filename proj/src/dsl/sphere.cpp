#include "ptlab/dsl/sphere.hpp"

#include <cmath>
#include <limits>

#include "ptlab/error.hpp"
#include "ptlab/rng.hpp"

namespace ptlab::dsl {

Eigen::VectorXd to_unit_sphere(const CompactPoint& p, int n) {
    Eigen::VectorXd s = Eigen::VectorXd::Zero(n + 1);
    if (p.at_infinity) {
        s[n] = 1.0;
        return s;
    }
    if (p.y.size() != n)
        raise(ErrorCode::dimension_mismatch, "chart point has wrong dimension");
    const double q = p.y.squaredNorm();
    s.head(n) = 2.0 * p.y / (q + 1.0);
    s[n] = (q - 1.0) / (q + 1.0);
    return s;
}

double chart_to_sphere_distance(const CompactPoint& a, const CompactPoint& b, int n) {
    return (to_unit_sphere(a, n) - to_unit_sphere(b, n)).norm();
}

SupportReport support_report(const SmoothMap& f, int samples, std::uint64_t seed) {
    SupportReport rep{std::numeric_limits<double>::infinity(), 0, 0, 0};
    Rng rng(seed ^ 0x5f0e1d2c3b4a5968ULL);
    const int m = f.domain_dim();
    const double r = f.support_radius();
    for (int i = 0; i < samples; ++i) {
        Eigen::VectorXd x = m == 1
            ? Eigen::VectorXd::Constant(1, (i % 2 == 0 ? r : -r))
            : Eigen::VectorXd(r * rng.sphere(m));
        // evaluate just inside the shell so the ∞ convention does not trigger
        Eval e = f.value(x * (1.0 - 1e-12));
        switch (e.status) {
        case EvalStatus::finite:
            ++rep.finite_samples;
            rep.min_norm = std::min(rep.min_norm, e.y.norm());
            break;
        case EvalStatus::infinite: ++rep.infinite_samples; break;
        case EvalStatus::undefined: ++rep.undefined_samples; break;
        }
    }
    return rep;
}

} // namespace ptlab::dsl
