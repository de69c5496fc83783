#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "ptlab/dsl/chart_map.hpp"
#include "ptlab/params.hpp"

namespace ptlab::preimage {

// Damped Newton for the square system f(x) = y from one start; empty when
// the iteration leaves the domain or stalls.
std::optional<Eigen::VectorXd> newton_square(const dsl::SmoothMap& f,
                                             const Eigen::VectorXd& y,
                                             const Eigen::VectorXd& x0,
                                             const PipelineParams& params);

// Minimum-norm Gauss-Newton projection onto the fiber f = y for maps with
// domain_dim >= codomain_dim.
std::optional<Eigen::VectorXd> project_to_fiber(const dsl::SmoothMap& f,
                                                const Eigen::VectorXd& y,
                                                const Eigen::VectorXd& x0,
                                                const PipelineParams& params);

// The 0-dimensional fiber: multistart damped Newton from a scrambled
// low-discrepancy stream over the support ball, deduplicated in seed order,
// each point certified regular. Throws NotRegular when a located point has
// a near-singular differential, BudgetExhausted when nothing converges on a
// map that visibly takes finite values.
std::vector<Eigen::VectorXd> solve_preimage_points(const dsl::SmoothMap& f,
                                                   const Eigen::VectorXd& y,
                                                   std::uint64_t rng_seed,
                                                   int budget,
                                                   const PipelineParams& params = {});

// Scattered points on a positive-dimensional fiber (no regularity demanded),
// deduplicated at the given radius; used for continuation seeding and for
// locating intersection points after perturbation.
std::vector<Eigen::VectorXd> scatter_on_fiber(const dsl::SmoothMap& f,
                                              const Eigen::VectorXd& y,
                                              std::uint64_t rng_seed, int seeds,
                                              double dedup_radius,
                                              const PipelineParams& params = {});

// Smallest singular value certifying surjectivity of an n x m differential
// (zero when m < n).
double surjectivity_sigma(const Eigen::MatrixXd& jacobian);

} // namespace ptlab::preimage
