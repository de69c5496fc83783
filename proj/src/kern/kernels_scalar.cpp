#include <cmath>

#include "ptlab/kern/kernels.hpp"
#include "ptlab/parallel.hpp"

// Reference kernels. The AVX2 variants mirror the same per-element formulas;
// only the accumulation order differs, which the equivalence suite bounds.

namespace ptlab::kern {

double linking_sum_scalar(const Points& mid_a, const Points& edge_a,
                          const Points& mid_b, const Points& edge_b) {
    const std::size_t na = mid_a.size();
    const std::size_t nb = mid_b.size();
    const double* max = mid_a.c[0].data();
    const double* may = mid_a.c[1].data();
    const double* maz = mid_a.c[2].data();
    const double* eax = edge_a.c[0].data();
    const double* eay = edge_a.c[1].data();
    const double* eaz = edge_a.c[2].data();
    const double* mbx = mid_b.c[0].data();
    const double* mby = mid_b.c[1].data();
    const double* mbz = mid_b.c[2].data();
    const double* ebx = edge_b.c[0].data();
    const double* eby = edge_b.c[1].data();
    const double* ebz = edge_b.c[2].data();

    return chunked_sum(na, 64, [&](std::size_t lo, std::size_t hi) {
        double total = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            double sub = 0.0;
            for (std::size_t j = 0; j < nb; ++j) {
                const double dx = max[i] - mbx[j];
                const double dy = may[i] - mby[j];
                const double dz = maz[i] - mbz[j];
                const double cx = eay[i] * ebz[j] - eaz[i] * eby[j];
                const double cy = eaz[i] * ebx[j] - eax[i] * ebz[j];
                const double cz = eax[i] * eby[j] - eay[i] * ebx[j];
                const double num = cx * dx + cy * dy + cz * dz;
                const double r2 = dx * dx + dy * dy + dz * dz;
                sub += num / (r2 * std::sqrt(r2));
            }
            total += sub;
        }
        return total;
    });
}

MinDistResult min_distance2_scalar(const Points& a, const Points& b) {
    MinDistResult best{1e300, 0, 0};
    const int dim = a.dim;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            double r2 = 0.0;
            for (int d = 0; d < dim; ++d) {
                const double diff = a.c[d][i] - b.c[d][j];
                r2 += diff * diff;
            }
            if (r2 < best.dist2) best = {r2, i, j};
        }
    }
    return best;
}

void close_pairs_scalar(const Points& pts, double thr, PairList& out, std::size_t cap) {
    const double thr2 = thr * thr;
    const int dim = pts.dim;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double r2 = 0.0;
            for (int d = 0; d < dim; ++d) {
                const double diff = pts.c[d][i] - pts.c[d][j];
                r2 += diff * diff;
            }
            if (r2 < thr2) {
                out.emplace_back(i, j);
                if (out.size() >= cap) return;
            }
        }
    }
}

NearestSegResult nearest_segment_scalar(const Points& base, const Points& edge,
                                        const double* q) {
    NearestSegResult best{0, 1e300, 0.0};
    const std::size_t n = base.size();
    const double* bx = base.c[0].data();
    const double* by = base.c[1].data();
    const double* bz = base.c[2].data();
    const double* ex = edge.c[0].data();
    const double* ey = edge.c[1].data();
    const double* ez = edge.c[2].data();
    for (std::size_t j = 0; j < n; ++j) {
        const double wx = q[0] - bx[j];
        const double wy = q[1] - by[j];
        const double wz = q[2] - bz[j];
        const double ee = ex[j] * ex[j] + ey[j] * ey[j] + ez[j] * ez[j] + 1e-300;
        double t = (wx * ex[j] + wy * ey[j] + wz * ez[j]) / ee;
        t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
        const double rx = wx - t * ex[j];
        const double ry = wy - t * ey[j];
        const double rz = wz - t * ez[j];
        const double r2 = rx * rx + ry * ry + rz * rz;
        if (r2 < best.dist2) best = {j, r2, t};
    }
    return best;
}

} // namespace ptlab::kern
