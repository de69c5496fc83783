#include "ptlab/preimage/solve.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "ptlab/error.hpp"
#include "ptlab/rng.hpp"

namespace ptlab::preimage {

namespace {

constexpr double kResidualTarget = 1e-12;

// Backtracking step acceptance shared by both solvers. Returns the new point
// or nullopt when no residual decrease was found.
std::optional<Eigen::VectorXd> damped_step(const dsl::SmoothMap& f,
                                           const Eigen::VectorXd& y,
                                           const Eigen::VectorXd& x, double res,
                                           const Eigen::VectorXd& delta) {
    double lambda = 1.0;
    for (int halving = 0; halving < 14; ++halving, lambda *= 0.5) {
        Eigen::VectorXd cand = x + lambda * delta;
        dsl::Eval e = f.value(cand);
        if (!e.finite()) continue;
        if ((e.y - y).norm() < res) return cand;
    }
    return std::nullopt;
}

template <typename SolveDelta>
std::optional<Eigen::VectorXd> iterate(const dsl::SmoothMap& f,
                                       const Eigen::VectorXd& y,
                                       Eigen::VectorXd x,
                                       const PipelineParams& params,
                                       SolveDelta&& solve_delta) {
    for (int iter = 0; iter < params.newton_max_iter; ++iter) {
        dsl::Eval e = f.jet(x);
        if (!e.finite()) return std::nullopt;
        const Eigen::VectorXd r = y - e.y;
        const double res = r.norm();
        if (res <= kResidualTarget) return x;
        Eigen::VectorXd delta = solve_delta(e.jacobian, r);
        if (!delta.allFinite()) return std::nullopt;
        auto next = damped_step(f, y, x, res, delta);
        if (!next) {
            // stalled; accept only if already within the loose residual
            return std::nullopt;
        }
        x = *next;
    }
    dsl::Eval e = f.value(x);
    if (e.finite() && (e.y - y).norm() <= kResidualTarget) return x;
    return std::nullopt;
}

} // namespace

double surjectivity_sigma(const Eigen::MatrixXd& jacobian) {
    if (jacobian.rows() > jacobian.cols()) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jacobian);
    return svd.singularValues()[jacobian.rows() - 1];
}

std::optional<Eigen::VectorXd> newton_square(const dsl::SmoothMap& f,
                                             const Eigen::VectorXd& y,
                                             const Eigen::VectorXd& x0,
                                             const PipelineParams& params) {
    return iterate(f, y, x0, params,
                   [](const Eigen::MatrixXd& j, const Eigen::VectorXd& r) {
                       return Eigen::VectorXd(j.partialPivLu().solve(r));
                   });
}

std::optional<Eigen::VectorXd> project_to_fiber(const dsl::SmoothMap& f,
                                                const Eigen::VectorXd& y,
                                                const Eigen::VectorXd& x0,
                                                const PipelineParams& params) {
    return iterate(f, y, x0, params,
                   [](const Eigen::MatrixXd& j, const Eigen::VectorXd& r) {
                       Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(j);
                       return Eigen::VectorXd(cod.solve(r));
                   });
}

std::vector<Eigen::VectorXd> solve_preimage_points(const dsl::SmoothMap& f,
                                                   const Eigen::VectorXd& y,
                                                   std::uint64_t rng_seed, int budget,
                                                   const PipelineParams& params) {
    if (f.domain_dim() != f.codomain_dim())
        raise(ErrorCode::dimension_mismatch,
              "point fibers need equal domain and codomain dimensions");
    if (y.size() != f.codomain_dim())
        raise(ErrorCode::dimension_mismatch, "regular value has wrong dimension");

    const int seeds = budget > 0 ? budget : params.newton_seeds;
    ScrambledHalton stream(f.domain_dim(), rng_seed);
    std::vector<Eigen::VectorXd> found;
    int finite_evals = 0;
    for (int s = 0; s < seeds; ++s) {
        Eigen::VectorXd x0 = stream.next_ball(f.support_radius());
        if (f.value(x0).finite()) ++finite_evals;
        auto root = newton_square(f, y, x0, params);
        if (!root) continue;
        bool duplicate = false;
        for (const auto& p : found) {
            if ((p - *root).norm() <= params.dedup_radius) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;
        dsl::Eval e = f.jet(*root);
        if (!e.finite()) continue;
        if ((e.y - y).norm() > params.point_residual) continue;
        if (surjectivity_sigma(e.jacobian) < params.tol)
            raise(ErrorCode::not_regular,
                  "located preimage point has near-singular differential");
        found.push_back(*root);
    }
    // A constant-∞ map has an empty fiber over any finite value; that is a
    // valid outcome, not an exhausted budget.
    if (found.empty() && finite_evals > 0) {
        // Finite values were seen but nothing converged: distinguish an
        // honestly empty fiber from a failing solve by checking whether the
        // map comes near y anywhere in the sample set.
        ScrambledHalton probe(f.domain_dim(), rng_seed ^ 0x9e3779b97f4a7c15ULL);
        double best = 1e300;
        for (int s = 0; s < 512; ++s) {
            dsl::Eval e = f.value(probe.next_ball(f.support_radius()));
            if (e.finite()) best = std::min(best, (e.y - y).norm());
        }
        if (best < 1e-3)
            raise(ErrorCode::budget_exhausted,
                  "map approaches the target value but Newton never converged");
    }
    return found;
}

std::vector<Eigen::VectorXd> scatter_on_fiber(const dsl::SmoothMap& f,
                                              const Eigen::VectorXd& y,
                                              std::uint64_t rng_seed, int seeds,
                                              double dedup_radius,
                                              const PipelineParams& params) {
    if (f.domain_dim() < f.codomain_dim())
        raise(ErrorCode::dimension_mismatch, "fiber projection needs domain >= codomain");
    ScrambledHalton stream(f.domain_dim(), rng_seed);
    std::vector<Eigen::VectorXd> found;
    for (int s = 0; s < seeds; ++s) {
        Eigen::VectorXd x0 = stream.next_ball(f.support_radius());
        auto pt = project_to_fiber(f, y, x0, params);
        if (!pt) continue;
        bool duplicate = false;
        for (const auto& p : found) {
            if ((p - *pt).norm() <= dedup_radius) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) found.push_back(*pt);
    }
    return found;
}

} // namespace ptlab::preimage
