#include "ptlab/trans/transversality.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "ptlab/error.hpp"
#include "ptlab/preimage/solve.hpp"
#include "ptlab/preimage/trace.hpp"
#include "ptlab/rng.hpp"

namespace ptlab::trans {

LevelSetSubmanifold make_level_set(dsl::MapPtr submersion, std::string description) {
    LevelSetSubmanifold s;
    s.ambient_dim = submersion->domain_dim();
    s.codim = submersion->codomain_dim();
    s.submersion = std::move(submersion);
    s.description = std::move(description);
    if (s.codim > s.ambient_dim)
        raise(ErrorCode::dimension_mismatch, "codimension exceeds ambient dimension");
    return s;
}

LevelSetSubmanifold translated(const LevelSetSubmanifold& s, const Eigen::VectorXd& t) {
    LevelSetSubmanifold out = s;
    out.submersion = dsl::shift_input(s.submersion, -t);
    out.description = s.description.empty() ? "translated level set"
                                            : s.description + " (translated)";
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::transverse: return "transverse";
    case Verdict::not_transverse: return "not-transverse";
    case Verdict::not_on_submanifold: return "not-on-S";
    }
    return "?";
}

TransversalityReport check_transverse(const dsl::SmoothMap& f,
                                      const LevelSetSubmanifold& s,
                                      const Eigen::VectorXd& x, double tol) {
    if (f.codomain_dim() != s.ambient_dim)
        raise(ErrorCode::dimension_mismatch,
              "map codomain does not match the submanifold ambient space");
    TransversalityReport rep;
    rep.point = x;
    rep.tolerance = tol;
    rep.sigma_min = 0.0;

    dsl::Eval fe = f.jet(x);
    if (fe.status == dsl::EvalStatus::undefined)
        raise(ErrorCode::domain_error, "map undefined at the queried point");
    rep.value = dsl::CompactPoint::from_eval(fe);
    if (fe.status == dsl::EvalStatus::infinite) {
        rep.verdict = Verdict::not_on_submanifold;
        return rep;
    }

    dsl::Eval pe = s.submersion->jet(fe.y);
    if (pe.status != dsl::EvalStatus::finite)
        raise(ErrorCode::domain_error, "submersion undefined at f(x)");
    if (pe.y.norm() > tol) {
        rep.verdict = Verdict::not_on_submanifold;
        return rep;
    }
    // lazy level-set invariant: the submersion must keep full rank here
    if (preimage::surjectivity_sigma(pe.jacobian) < 1e-8)
        raise(ErrorCode::degenerate_submersion,
              "level-set submersion loses rank at the queried point");

    const Eigen::MatrixXd composed = pe.jacobian * fe.jacobian;
    rep.sigma_min = preimage::surjectivity_sigma(composed);
    rep.verdict = rep.sigma_min >= tol ? Verdict::transverse : Verdict::not_transverse;
    return rep;
}

bool is_regular_value(const dsl::SmoothMap& f, const Eigen::VectorXd& y,
                      const std::vector<Eigen::VectorXd>& preimage_points,
                      double tol) {
    for (const auto& x : preimage_points) {
        dsl::Eval e = f.jet(x);
        if (!e.finite() || (e.y - y).norm() > 1e-8)
            raise(ErrorCode::point_not_on_fiber,
                  "supplied point does not lie on the fiber of y");
        if (preimage::surjectivity_sigma(e.jacobian) < tol) return false;
    }
    return true;
}

Eigen::VectorXd find_regular_value(const dsl::SmoothMap& f, double search_radius,
                                   std::uint64_t rng_seed, int budget,
                                   const PipelineParams& params) {
    if (budget < 1) raise(ErrorCode::budget_exhausted, "budget must be at least 1");
    const int k = f.domain_dim() - f.codomain_dim();
    if (k != 0 && k != 1)
        raise(ErrorCode::unsupported_dimension,
              "regular-value search supports codimension 0 and 1 fibers");
    Rng rng(rng_seed);
    std::string last_failure = "no candidate sampled";
    for (int attempt = 0; attempt < budget; ++attempt) {
        const Eigen::VectorXd y = search_radius == 0.0
                                      ? Eigen::VectorXd::Zero(f.codomain_dim())
                                      : Eigen::VectorXd(rng.ball(f.codomain_dim(),
                                                                 search_radius));
        try {
            if (k == 0) {
                (void)preimage::solve_preimage_points(f, y, rng_seed + attempt, 0, params);
            } else {
                (void)preimage::trace_preimage_loops(f, y, params.step,
                                                     rng_seed + attempt, 0, params);
            }
            return y;
        } catch (const Error& err) {
            last_failure = err.what();
        }
    }
    raise(ErrorCode::budget_exhausted,
          "no certified regular value within budget; the map may be "
          "ill-conditioned or constant (last failure: " + last_failure + ")");
}

PerturbResult perturb_to_transverse(const dsl::SmoothMap& f,
                                    const LevelSetSubmanifold& s, double radius,
                                    std::uint64_t rng_seed, int budget,
                                    const PipelineParams& params) {
    if (radius <= 0.0)
        raise(ErrorCode::precondition_violated, "perturbation radius must be positive");
    if (f.codomain_dim() != s.ambient_dim)
        raise(ErrorCode::dimension_mismatch,
              "map codomain does not match the submanifold ambient space");

    // The SmoothMap is shared by value semantics only through MapPtr; wrap f.
    struct Ref final : dsl::SmoothMap {
        const dsl::SmoothMap& f;
        explicit Ref(const dsl::SmoothMap& m) : f(m) {}
        int domain_dim() const override { return f.domain_dim(); }
        int codomain_dim() const override { return f.codomain_dim(); }
        double support_radius() const override { return f.support_radius(); }
        dsl::Eval value(const Eigen::VectorXd& x) const override { return f.value(x); }
        dsl::Eval jet(const Eigen::VectorXd& x) const override { return f.jet(x); }
        std::string describe() const override { return f.describe(); }
    };
    auto base = std::make_shared<Ref>(f);

    Rng rng(rng_seed);
    const Eigen::VectorXd zero_vec = Eigen::VectorXd::Zero(f.codomain_dim());
    const Eigen::VectorXd target = Eigen::VectorXd::Zero(s.codim);
    for (int attempt = 0; attempt < budget; ++attempt) {
        // t = 0 first: an already transverse map is accepted unshifted
        const Eigen::VectorXd t =
            attempt == 0 ? zero_vec : Eigen::VectorXd(rng.ball(f.codomain_dim(), radius));
        dsl::MapPtr shifted = dsl::shift_output(base, t);
        dsl::MapPtr composed = dsl::compose(s.submersion, shifted);
        std::vector<Eigen::VectorXd> located =
            preimage::scatter_on_fiber(*composed, target, rng_seed ^ 0xabcd1234ULL, 256,
                                       params.dedup_radius, params);
        bool all_ok = true;
        for (const auto& x : located) {
            TransversalityReport rep = check_transverse(*shifted, s, x, params.tol);
            if (rep.verdict != Verdict::transverse) {
                all_ok = false;
                break;
            }
        }
        if (all_ok) return PerturbResult{t, shifted, std::move(located), attempt + 1};
    }
    raise(ErrorCode::budget_exhausted, "no transverse shift found within budget");
}

} // namespace ptlab::trans
