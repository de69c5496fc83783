#pragma once

#include <vector>

#include <Eigen/Core>

#include "ptlab/kern/kernels.hpp"

namespace ptlab::geom {

// A sampled curve. Closed loops duplicate the first sample at the end, so
// segments are always consecutive sample pairs.
struct PolyLoop {
    std::vector<Eigen::VectorXd> samples;
    bool closed = true;

    int ambient_dim() const { return samples.empty() ? 0 : static_cast<int>(samples[0].size()); }
    std::size_t segment_count() const { return samples.empty() ? 0 : samples.size() - 1; }
};

inline constexpr double kLoopCloseTol = 1e-9;

// Checks the sampling invariants: closed loops carry >= 8 samples with the
// first repeated at the end (to 1e-9), consecutive samples are distinct.
void validate_polyloop(const PolyLoop& loop);

double loop_length(const PolyLoop& loop);

// Central-difference unit tangent at sample i (wraps around for closed loops).
Eigen::VectorXd central_tangent(const PolyLoop& loop, std::size_t i);

// Segment bases, edges and midpoints in kernel layout (3-D loops).
struct SegmentSoA {
    kern::Points base{3}, edge{3}, mid{3};
};
SegmentSoA segments_soa(const PolyLoop& loop);

kern::Points samples_soa(const PolyLoop& loop);

// Minimum distance between the sample sets of two curves.
double min_sample_distance(const PolyLoop& a, const PolyLoop& b);

// Reverses the traversal orientation.
PolyLoop reversed(const PolyLoop& loop);

// Arc-length uniform resampling of a closed loop to `segments` segments.
PolyLoop resample_closed(const PolyLoop& loop, std::size_t segments);

// Circle through `center` in the plane spanned by the orthonormal pair
// (e1, e2); `segments` segments plus the closing sample.
PolyLoop circle_loop(const Eigen::Vector3d& center, const Eigen::Vector3d& e1,
                     const Eigen::Vector3d& e2, double radius, std::size_t segments);

} // namespace ptlab::geom
