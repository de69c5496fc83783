#pragma once

#include <cstddef>

namespace ptlab {

// Pipeline knobs with their module defaults. The CLI exposes each as a flag.
struct PipelineParams {
    // transversality threshold on the smallest singular value
    double tol = 1e-6;
    // fiber residual targets
    double point_residual = 1e-10;
    double loop_residual = 1e-8;
    // multistart Newton
    int newton_seeds = 4096;
    int newton_max_iter = 60;
    double dedup_radius = 1e-6;
    // regular-value search
    double search_radius = 1.0;
    int value_budget = 64;
    // continuation
    double step = 0.02;
    double min_step = 1e-5;
    int trace_budget = 400000;
    std::size_t loop_resample = 1024;
    // product neighborhood certificate
    int cert_samples = 4096;
    double cert_image_tol = 1e-9;
    double epsilon_floor = 1e-7;
    // descriptor
    double push_off_factor = 10.0;
    double linking_round_tol = 5e-3;
};

} // namespace ptlab
