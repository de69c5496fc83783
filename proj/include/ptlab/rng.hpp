#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace ptlab {

// SplitMix64, used to expand a user seed into engine state.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256**. Deterministic across platforms; all uniform deviates are
// produced by explicit bit manipulation, never by std:: distributions,
// so seeded runs are reproducible bit-for-bit anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0,1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [a,b)
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // uniform in the closed ball of given radius (rejection from the cube)
    Eigen::VectorXd ball(int dim, double radius) {
        Eigen::VectorXd x(dim);
        while (true) {
            for (int i = 0; i < dim; ++i) x[i] = uniform(-1.0, 1.0);
            if (x.squaredNorm() <= 1.0) return radius * x;
        }
    }

    // uniform direction on the unit sphere
    Eigen::VectorXd sphere(int dim) {
        while (true) {
            Eigen::VectorXd x = ball(dim, 1.0);
            double n = x.norm();
            if (n > 1e-3) return x / n;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> s_;
};

// Halton sequence with a seeded Cranley-Patterson rotation per dimension.
// Streams points of the cube [-1,1]^dim scaled by radius; ball() filters
// to the inscribed ball, preserving determinism.
class ScrambledHalton {
public:
    ScrambledHalton(int dim, std::uint64_t seed);

    Eigen::VectorXd next_cube(double radius);
    Eigen::VectorXd next_ball(double radius);

private:
    static double radical_inverse(std::uint64_t i, std::uint64_t base);
    int dim_;
    std::uint64_t index_ = 1;
    std::vector<double> shift_;
};

} // namespace ptlab
