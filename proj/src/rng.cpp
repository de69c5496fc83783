#include "ptlab/rng.hpp"

#include <cmath>

#include "ptlab/error.hpp"

namespace ptlab {

namespace {
constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};
}

ScrambledHalton::ScrambledHalton(int dim, std::uint64_t seed) : dim_(dim) {
    if (dim < 1 || dim > 8)
        raise(ErrorCode::unsupported_dimension, "Halton stream supports 1..8 dimensions");
    Rng rng(seed);
    shift_.resize(dim);
    for (auto& s : shift_) s = rng.uniform01();
}

double ScrambledHalton::radical_inverse(std::uint64_t i, std::uint64_t base) {
    double inv = 1.0 / static_cast<double>(base);
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

Eigen::VectorXd ScrambledHalton::next_cube(double radius) {
    Eigen::VectorXd x(dim_);
    for (int d = 0; d < dim_; ++d) {
        double u = radical_inverse(index_, kPrimes[d]) + shift_[d];
        u -= std::floor(u);
        x[d] = radius * (2.0 * u - 1.0);
    }
    ++index_;
    return x;
}

Eigen::VectorXd ScrambledHalton::next_ball(double radius) {
    while (true) {
        Eigen::VectorXd x = next_cube(radius);
        if (x.squaredNorm() <= radius * radius) return x;
    }
}

} // namespace ptlab
