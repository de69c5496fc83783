#include "ptlab/preimage/pipeline.hpp"

#include "ptlab/error.hpp"
#include "ptlab/preimage/solve.hpp"
#include "ptlab/preimage/trace.hpp"
#include "ptlab/trans/transversality.hpp"

namespace ptlab::preimage {

namespace {

void check_dims(const dsl::SmoothMap& f, int n, int k) {
    if (k != 0 && k != 1)
        raise(ErrorCode::unsupported_dimension,
              "only 0- and 1-dimensional fibers are supported");
    if (f.codomain_dim() != n || f.domain_dim() != n + k)
        raise(ErrorCode::dimension_mismatch,
              "map dimensions do not match the requested (n, k)");
}

} // namespace

PontryaginManifold extract_at(const dsl::SmoothMap& f, const Eigen::VectorXd& y,
                              int n, int k, std::uint64_t rng_seed,
                              const PipelineParams& params) {
    check_dims(f, n, k);
    const geom::Frame nu = geom::make_frame(Eigen::MatrixXd::Identity(n, n));

    if (k == 0) {
        std::vector<Eigen::VectorXd> pts =
            solve_preimage_points(f, y, rng_seed, 0, params);
        return pullback_framing(f, y, pts, nu);
    }

    std::vector<geom::PolyLoop> loops =
        trace_preimage_loops(f, y, params.step, rng_seed, 0, params);
    if (params.loop_resample > 0) {
        for (auto& loop : loops) {
            geom::PolyLoop resampled = geom::resample_closed(loop, params.loop_resample);
            for (auto& s : resampled.samples) {
                auto refined = project_to_fiber(f, y, s, params);
                if (refined) s = *refined;
            }
            resampled.samples.back() = resampled.samples.front();
            loop = std::move(resampled);
        }
    }
    return pullback_framing(f, y, loops, nu);
}

PontryaginManifold pontryagin_manifold(const dsl::SmoothMap& f, int n, int k,
                                       std::uint64_t rng_seed,
                                       const PipelineParams& params) {
    check_dims(f, n, k);
    const Eigen::VectorXd y = trans::find_regular_value(f, params.search_radius,
                                                        rng_seed, params.value_budget,
                                                        params);
    return extract_at(f, y, n, k, rng_seed, params);
}

} // namespace ptlab::preimage
