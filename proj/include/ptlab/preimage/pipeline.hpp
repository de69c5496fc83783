#pragma once

#include <cstdint>

#include "ptlab/preimage/framing.hpp"
#include "ptlab/params.hpp"

namespace ptlab::preimage {

// Full extraction at a caller-chosen regular value: locate the fiber
// (points for k=0, traced loops for k=1), then pull back the standard frame.
// Loops are resampled to params.loop_resample arc-uniform segments and
// reprojected onto the fiber before framing.
PontryaginManifold extract_at(const dsl::SmoothMap& f, const Eigen::VectorXd& y,
                              int n, int k, std::uint64_t rng_seed,
                              const PipelineParams& params = {});

// The construction pipeline: find a certified regular value, extract the
// fiber, pull back the standard positively oriented frame.
PontryaginManifold pontryagin_manifold(const dsl::SmoothMap& f, int n, int k,
                                       std::uint64_t rng_seed,
                                       const PipelineParams& params = {});

} // namespace ptlab::preimage
