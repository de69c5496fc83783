#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ptlab/dsl/chart_map.hpp"
#include "ptlab/dsl/sphere.hpp"
#include "ptlab/params.hpp"

namespace ptlab::trans {

// S = φ^{-1}(0) for a submersion φ: R^n -> R^c. Full rank of dφ is checked
// lazily at queried points of the level set.
struct LevelSetSubmanifold {
    int ambient_dim;
    int codim;
    dsl::MapPtr submersion;
    std::string description;
};

LevelSetSubmanifold make_level_set(dsl::MapPtr submersion, std::string description = {});

// S shifted by t: the new submersion reads x -> φ(x - t).
LevelSetSubmanifold translated(const LevelSetSubmanifold& s, const Eigen::VectorXd& t);

enum class Verdict { transverse, not_transverse, not_on_submanifold };

const char* verdict_name(Verdict v);

struct TransversalityReport {
    Eigen::VectorXd point;
    dsl::CompactPoint value; // f(x)
    Verdict verdict;
    double sigma_min; // of the composed differential dφ∘df (0 when off S)
    double tolerance;
};

// Transversality of f to S at x: not-on-S when |φ(f(x))| > tol, else
// transverse iff the composed differential keeps all c singular values
// at or above tol.
TransversalityReport check_transverse(const dsl::SmoothMap& f,
                                      const LevelSetSubmanifold& s,
                                      const Eigen::VectorXd& x, double tol = 1e-6);

// Regularity of y: every supplied preimage point must satisfy
// |f(x) - y| <= 1e-8 (PointNotOnFiber otherwise), and df must be surjective
// with sigma_min >= tol at each.
bool is_regular_value(const dsl::SmoothMap& f, const Eigen::VectorXd& y,
                      const std::vector<Eigen::VectorXd>& preimage_points,
                      double tol = 1e-6);

// Rejection-samples values in the ball of search_radius until the full
// preimage pipeline (k = domain - codomain, 0 or 1) certifies regularity.
// Deterministic in rng_seed; BudgetExhausted after `budget` failures.
Eigen::VectorXd find_regular_value(const dsl::SmoothMap& f, double search_radius,
                                   std::uint64_t rng_seed, int budget,
                                   const PipelineParams& params = {});

struct PerturbResult {
    Eigen::VectorXd t;
    dsl::MapPtr shifted;                    // f_t(x) = f(x) + t
    std::vector<Eigen::VectorXd> located;   // intersection points checked
    int attempts;
};

// Parametric genericity made computational: samples shifts t in the ball of
// `radius` until every located point of f_t^{-1}(S) certifies transverse.
// t = 0 is tried first so an already-transverse map comes back unshifted.
PerturbResult perturb_to_transverse(const dsl::SmoothMap& f,
                                    const LevelSetSubmanifold& s, double radius,
                                    std::uint64_t rng_seed, int budget,
                                    const PipelineParams& params = {});

} // namespace ptlab::trans
