#pragma once

#include <array>
#include <cmath>

#include "ptlab/error.hpp"

namespace ptlab::dsl {

inline constexpr int kMaxVars = 6;

// Forward-mode dual number carrying the full gradient with respect to up to
// kMaxVars inputs. Gradient lanes beyond the active dimension stay zero.
struct Dual {
    double v = 0.0;
    std::array<double, kMaxVars> g{};

    Dual() = default;
    explicit Dual(double value) : v(value) {}

    static Dual variable(double value, int lane) {
        Dual d(value);
        d.g[lane] = 1.0;
        return d;
    }
};

inline Dual operator+(const Dual& a, const Dual& b) {
    Dual r(a.v + b.v);
    for (int i = 0; i < kMaxVars; ++i) r.g[i] = a.g[i] + b.g[i];
    return r;
}

inline Dual operator-(const Dual& a, const Dual& b) {
    Dual r(a.v - b.v);
    for (int i = 0; i < kMaxVars; ++i) r.g[i] = a.g[i] - b.g[i];
    return r;
}

inline Dual operator-(const Dual& a) {
    Dual r(-a.v);
    for (int i = 0; i < kMaxVars; ++i) r.g[i] = -a.g[i];
    return r;
}

inline Dual operator*(const Dual& a, const Dual& b) {
    Dual r(a.v * b.v);
    for (int i = 0; i < kMaxVars; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
    return r;
}

inline Dual operator/(const Dual& a, const Dual& b) {
    if (b.v == 0.0) raise(ErrorCode::domain_error, "division by zero");
    Dual r(a.v / b.v);
    const double inv2 = 1.0 / (b.v * b.v);
    for (int i = 0; i < kMaxVars; ++i) r.g[i] = (a.g[i] * b.v - a.v * b.g[i]) * inv2;
    return r;
}

inline Dual sin(const Dual& a) {
    Dual r(std::sin(a.v));
    const double c = std::cos(a.v);
    for (int i = 0; i < kMaxVars; ++i) r.g[i] = c * a.g[i];
    return r;
}

inline Dual cos(const Dual& a) {
    Dual r(std::cos(a.v));
    const double s = -std::sin(a.v);
    for (int i = 0; i < kMaxVars; ++i) r.g[i] = s * a.g[i];
    return r;
}

inline Dual exp(const Dual& a) {
    Dual r(std::exp(a.v));
    for (int i = 0; i < kMaxVars; ++i) r.g[i] = r.v * a.g[i];
    return r;
}

inline Dual sqrt(const Dual& a) {
    if (a.v < 0.0) raise(ErrorCode::domain_error, "sqrt of negative value");
    Dual r(std::sqrt(a.v));
    const double d = 0.5 / (r.v == 0.0 ? 1e-300 : r.v);
    for (int i = 0; i < kMaxVars; ++i) r.g[i] = d * a.g[i];
    return r;
}

// Scalar shims so the evaluator template works for plain doubles.
inline double sin(double a) { return std::sin(a); }
inline double cos(double a) { return std::cos(a); }
inline double exp(double a) { return std::exp(a); }
inline double sqrt(double a) {
    if (a < 0.0) raise(ErrorCode::domain_error, "sqrt of negative value");
    return std::sqrt(a);
}

} // namespace ptlab::dsl
