#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "ptlab/dsl/chart_map.hpp"

namespace ptlab::dsl {

// A point of the compactified target R^n ∪ {∞}.
struct CompactPoint {
    bool at_infinity = false;
    Eigen::VectorXd y;

    static CompactPoint infinity() { return CompactPoint{true, {}}; }
    static CompactPoint finite(Eigen::VectorXd v) { return CompactPoint{false, std::move(v)}; }
    static CompactPoint from_eval(const Eval& e) {
        if (e.status == EvalStatus::finite) return finite(e.y);
        return infinity();
    }
};

// Inverse stereographic embedding of the chart into the unit sphere S^n in
// R^{n+1}; ∞ maps to the north pole, 0 to the south pole.
Eigen::VectorXd to_unit_sphere(const CompactPoint& p, int n);

// Chordal metric on the compactified target: symmetric, zero iff equal,
// bounded by the sphere diameter 2.
double chart_to_sphere_distance(const CompactPoint& a, const CompactPoint& b, int n);

// Advisory support honesty check: samples the sphere of the support radius
// and reports how close the map comes to finite values there.
struct SupportReport {
    double min_norm;    // min |f(x)| over finite samples (inf if none)
    int finite_samples;
    int infinite_samples;
    int undefined_samples;
};
SupportReport support_report(const SmoothMap& f, int samples = 256,
                             std::uint64_t seed = 0);

} // namespace ptlab::dsl
