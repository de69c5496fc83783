#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace ptlab::kern {

// Structure-of-arrays point storage for the data-parallel inner loops.
// Coordinates live in per-axis contiguous arrays so both the scalar and the
// AVX2 kernels stream them directly.
struct Points {
    int dim = 3;
    std::array<std::vector<double>, 4> c;

    Points() = default;
    explicit Points(int d) : dim(d) {}

    std::size_t size() const { return c[0].size(); }

    void push(const Eigen::VectorXd& p) {
        for (int d = 0; d < dim; ++d) c[d].push_back(p[d]);
    }

    Eigen::VectorXd get(std::size_t i) const {
        Eigen::VectorXd p(dim);
        for (int d = 0; d < dim; ++d) p[d] = c[d][i];
        return p;
    }
};

enum class Backend { scalar, avx2 };

// Selected at startup: AVX2 when the CPU supports it and the binary carries
// the AVX2 translation unit; PONTRYAGIN_KERNEL=scalar|avx2 overrides.
Backend active_backend();
const char* backend_name(Backend backend);
bool avx2_available();

struct MinDistResult {
    double dist2;
    std::size_t i, j;
};

struct NearestSegResult {
    std::size_t index;
    double dist2;
    double t; // clamped segment parameter in [0,1]
};

using PairList = std::vector<std::pair<std::size_t, std::size_t>>;

// Gauss-integral double sum over all segment pairs of two loops in R^3:
//   sum_{i,j} ((ea_i x eb_j) . (ma_i - mb_j)) / |ma_i - mb_j|^3
double linking_sum(const Points& mid_a, const Points& edge_a,
                   const Points& mid_b, const Points& edge_b);

// Minimum squared distance between two point sets of equal dim, with argmin.
MinDistResult min_distance2(const Points& a, const Points& b);

// All unordered pairs (i<j) within one set closer than thr; stops at cap.
void close_pairs(const Points& pts, double thr, PairList& out, std::size_t cap);

// Nearest segment [base_i, base_i + edge_i] to a 3-D query point.
NearestSegResult nearest_segment(const Points& base, const Points& edge,
                                 const double* query);

// Per-backend entry points, exposed for the equivalence suite.
double linking_sum_scalar(const Points&, const Points&, const Points&, const Points&);
MinDistResult min_distance2_scalar(const Points&, const Points&);
void close_pairs_scalar(const Points&, double, PairList&, std::size_t);
NearestSegResult nearest_segment_scalar(const Points&, const Points&, const double*);

double linking_sum_avx2(const Points&, const Points&, const Points&, const Points&);
MinDistResult min_distance2_avx2(const Points&, const Points&);
void close_pairs_avx2(const Points&, double, PairList&, std::size_t);
NearestSegResult nearest_segment_avx2(const Points&, const Points&, const double*);

} // namespace ptlab::kern
