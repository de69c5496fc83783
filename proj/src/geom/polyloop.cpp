#include "ptlab/geom/polyloop.hpp"

#include <cmath>

#include "ptlab/error.hpp"

namespace ptlab::geom {

void validate_polyloop(const PolyLoop& loop) {
    if (loop.closed && loop.samples.size() < 9) // 8 distinct + closing duplicate
        raise(ErrorCode::degenerate_frame, "closed loop needs at least 8 samples");
    if (!loop.closed && loop.samples.size() < 2)
        raise(ErrorCode::degenerate_frame, "arc needs at least 2 samples");
    for (std::size_t i = 0; i + 1 < loop.samples.size(); ++i) {
        if ((loop.samples[i + 1] - loop.samples[i]).norm() == 0.0)
            raise(ErrorCode::degenerate_frame, "consecutive loop samples coincide");
    }
    if (loop.closed &&
        (loop.samples.front() - loop.samples.back()).norm() > kLoopCloseTol)
        raise(ErrorCode::continuation_failed, "closed loop does not close");
}

double loop_length(const PolyLoop& loop) {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < loop.samples.size(); ++i)
        len += (loop.samples[i + 1] - loop.samples[i]).norm();
    return len;
}

Eigen::VectorXd central_tangent(const PolyLoop& loop, std::size_t i) {
    const auto& s = loop.samples;
    const std::size_t n = s.size();
    Eigen::VectorXd diff;
    if (loop.closed) {
        // index arithmetic over the n-1 distinct samples
        const std::size_t m = n - 1;
        const std::size_t prev = (i + m - 1) % m;
        const std::size_t next = (i + 1) % m;
        diff = s[next] - s[prev];
    } else if (i == 0) {
        diff = s[1] - s[0];
    } else if (i + 1 >= n) {
        diff = s[n - 1] - s[n - 2];
    } else {
        diff = s[i + 1] - s[i - 1];
    }
    double norm = diff.norm();
    if (norm == 0.0) raise(ErrorCode::degenerate_frame, "zero tangent");
    return diff / norm;
}

SegmentSoA segments_soa(const PolyLoop& loop) {
    if (loop.ambient_dim() != 3)
        raise(ErrorCode::wrong_ambient_dimension, "segment kernels require loops in R^3");
    SegmentSoA soa;
    for (std::size_t i = 0; i + 1 < loop.samples.size(); ++i) {
        const Eigen::VectorXd& a = loop.samples[i];
        const Eigen::VectorXd edge = loop.samples[i + 1] - a;
        soa.base.push(a);
        soa.edge.push(edge);
        soa.mid.push(a + 0.5 * edge);
    }
    return soa;
}

kern::Points samples_soa(const PolyLoop& loop) {
    kern::Points pts(loop.ambient_dim());
    for (const auto& s : loop.samples) pts.push(s);
    return pts;
}

double min_sample_distance(const PolyLoop& a, const PolyLoop& b) {
    if (a.ambient_dim() != b.ambient_dim())
        raise(ErrorCode::dimension_mismatch, "loops live in different ambient spaces");
    auto res = kern::min_distance2(samples_soa(a), samples_soa(b));
    return std::sqrt(res.dist2);
}

PolyLoop reversed(const PolyLoop& loop) {
    PolyLoop out;
    out.closed = loop.closed;
    out.samples.assign(loop.samples.rbegin(), loop.samples.rend());
    return out;
}

PolyLoop resample_closed(const PolyLoop& loop, std::size_t segments) {
    if (!loop.closed) raise(ErrorCode::continuation_failed, "resample needs a closed loop");
    const double total = loop_length(loop);
    PolyLoop out;
    out.closed = true;
    out.samples.reserve(segments + 1);
    std::size_t seg = 0;
    double seg_start = 0.0;
    double seg_len = (loop.samples[1] - loop.samples[0]).norm();
    for (std::size_t i = 0; i < segments; ++i) {
        const double target = total * static_cast<double>(i) / static_cast<double>(segments);
        while (seg_start + seg_len < target && seg + 2 < loop.samples.size()) {
            seg_start += seg_len;
            ++seg;
            seg_len = (loop.samples[seg + 1] - loop.samples[seg]).norm();
        }
        const double t = seg_len == 0.0 ? 0.0 : (target - seg_start) / seg_len;
        out.samples.push_back(loop.samples[seg] +
                              t * (loop.samples[seg + 1] - loop.samples[seg]));
    }
    out.samples.push_back(out.samples.front());
    return out;
}

PolyLoop circle_loop(const Eigen::Vector3d& center, const Eigen::Vector3d& e1,
                     const Eigen::Vector3d& e2, double radius, std::size_t segments) {
    PolyLoop loop;
    loop.closed = true;
    loop.samples.reserve(segments + 1);
    for (std::size_t i = 0; i < segments; ++i) {
        const double a = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(segments);
        loop.samples.push_back(center + radius * (std::cos(a) * e1 + std::sin(a) * e2));
    }
    loop.samples.push_back(loop.samples.front());
    return loop;
}

} // namespace ptlab::geom
