// AVX2 variants of the inner-loop kernels. This translation unit is compiled
// with -mavx2 on x86-64 only; dispatch.cpp selects it at runtime.

#include <cmath>
#include <immintrin.h>

#include "ptlab/kern/kernels.hpp"
#include "ptlab/parallel.hpp"

namespace ptlab::kern {

namespace {

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

} // namespace

double linking_sum_avx2(const Points& mid_a, const Points& edge_a,
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
            const __m256d ax = _mm256_set1_pd(max[i]);
            const __m256d ay = _mm256_set1_pd(may[i]);
            const __m256d az = _mm256_set1_pd(maz[i]);
            const __m256d ux = _mm256_set1_pd(eax[i]);
            const __m256d uy = _mm256_set1_pd(eay[i]);
            const __m256d uz = _mm256_set1_pd(eaz[i]);
            __m256d acc = _mm256_setzero_pd();
            std::size_t j = 0;
            for (; j + 4 <= nb; j += 4) {
                const __m256d dx = _mm256_sub_pd(ax, _mm256_loadu_pd(mbx + j));
                const __m256d dy = _mm256_sub_pd(ay, _mm256_loadu_pd(mby + j));
                const __m256d dz = _mm256_sub_pd(az, _mm256_loadu_pd(mbz + j));
                const __m256d vx = _mm256_loadu_pd(ebx + j);
                const __m256d vy = _mm256_loadu_pd(eby + j);
                const __m256d vz = _mm256_loadu_pd(ebz + j);
                const __m256d cx = _mm256_sub_pd(_mm256_mul_pd(uy, vz), _mm256_mul_pd(uz, vy));
                const __m256d cy = _mm256_sub_pd(_mm256_mul_pd(uz, vx), _mm256_mul_pd(ux, vz));
                const __m256d cz = _mm256_sub_pd(_mm256_mul_pd(ux, vy), _mm256_mul_pd(uy, vx));
                const __m256d num = _mm256_add_pd(
                    _mm256_add_pd(_mm256_mul_pd(cx, dx), _mm256_mul_pd(cy, dy)),
                    _mm256_mul_pd(cz, dz));
                const __m256d r2 = _mm256_add_pd(
                    _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                    _mm256_mul_pd(dz, dz));
                const __m256d den = _mm256_mul_pd(r2, _mm256_sqrt_pd(r2));
                acc = _mm256_add_pd(acc, _mm256_div_pd(num, den));
            }
            double sub = hsum(acc);
            for (; j < nb; ++j) {
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

MinDistResult min_distance2_avx2(const Points& a, const Points& b) {
    MinDistResult best{1e300, 0, 0};
    const int dim = a.dim;
    const std::size_t nb = b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        __m256d vmin = _mm256_set1_pd(1e300);
        __m256d vidx = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j + 4 <= nb; j += 4) {
            __m256d r2 = _mm256_setzero_pd();
            for (int d = 0; d < dim; ++d) {
                const __m256d diff = _mm256_sub_pd(_mm256_set1_pd(a.c[d][i]),
                                                   _mm256_loadu_pd(b.c[d].data() + j));
                r2 = _mm256_add_pd(r2, _mm256_mul_pd(diff, diff));
            }
            const __m256d jv = _mm256_set_pd(double(j + 3), double(j + 2),
                                             double(j + 1), double(j));
            const __m256d mask = _mm256_cmp_pd(r2, vmin, _CMP_LT_OQ);
            vmin = _mm256_blendv_pd(vmin, r2, mask);
            vidx = _mm256_blendv_pd(vidx, jv, mask);
        }
        alignas(32) double vals[4], idxs[4];
        _mm256_store_pd(vals, vmin);
        _mm256_store_pd(idxs, vidx);
        for (int lane = 0; lane < 4; ++lane) {
            if (vals[lane] < best.dist2)
                best = {vals[lane], i, static_cast<std::size_t>(idxs[lane])};
        }
        for (; j < nb; ++j) {
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

void close_pairs_avx2(const Points& pts, double thr, PairList& out, std::size_t cap) {
    const double thr2 = thr * thr;
    const __m256d vthr2 = _mm256_set1_pd(thr2);
    const int dim = pts.dim;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t j = i + 1;
        for (; j + 4 <= n; j += 4) {
            __m256d r2 = _mm256_setzero_pd();
            for (int d = 0; d < dim; ++d) {
                const __m256d diff = _mm256_sub_pd(_mm256_set1_pd(pts.c[d][i]),
                                                   _mm256_loadu_pd(pts.c[d].data() + j));
                r2 = _mm256_add_pd(r2, _mm256_mul_pd(diff, diff));
            }
            const int hits = _mm256_movemask_pd(_mm256_cmp_pd(r2, vthr2, _CMP_LT_OQ));
            if (hits) {
                for (int lane = 0; lane < 4; ++lane) {
                    if (hits & (1 << lane)) {
                        out.emplace_back(i, j + lane);
                        if (out.size() >= cap) return;
                    }
                }
            }
        }
        for (; j < n; ++j) {
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

NearestSegResult nearest_segment_avx2(const Points& base, const Points& edge,
                                      const double* q) {
    const std::size_t n = base.size();
    const double* bx = base.c[0].data();
    const double* by = base.c[1].data();
    const double* bz = base.c[2].data();
    const double* ex = edge.c[0].data();
    const double* ey = edge.c[1].data();
    const double* ez = edge.c[2].data();
    const __m256d qx = _mm256_set1_pd(q[0]);
    const __m256d qy = _mm256_set1_pd(q[1]);
    const __m256d qz = _mm256_set1_pd(q[2]);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d tiny = _mm256_set1_pd(1e-300);

    __m256d vmin = _mm256_set1_pd(1e300);
    __m256d vidx = _mm256_setzero_pd();
    __m256d vt = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d wx = _mm256_sub_pd(qx, _mm256_loadu_pd(bx + j));
        const __m256d wy = _mm256_sub_pd(qy, _mm256_loadu_pd(by + j));
        const __m256d wz = _mm256_sub_pd(qz, _mm256_loadu_pd(bz + j));
        const __m256d vx = _mm256_loadu_pd(ex + j);
        const __m256d vy = _mm256_loadu_pd(ey + j);
        const __m256d vz = _mm256_loadu_pd(ez + j);
        const __m256d ee = _mm256_add_pd(
            _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(vx, vx), _mm256_mul_pd(vy, vy)),
                          _mm256_mul_pd(vz, vz)),
            tiny);
        const __m256d we = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(wx, vx), _mm256_mul_pd(wy, vy)),
            _mm256_mul_pd(wz, vz));
        __m256d t = _mm256_div_pd(we, ee);
        t = _mm256_min_pd(_mm256_max_pd(t, zero), one);
        const __m256d rx = _mm256_sub_pd(wx, _mm256_mul_pd(t, vx));
        const __m256d ry = _mm256_sub_pd(wy, _mm256_mul_pd(t, vy));
        const __m256d rz = _mm256_sub_pd(wz, _mm256_mul_pd(t, vz));
        const __m256d r2 = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(rx, rx), _mm256_mul_pd(ry, ry)),
            _mm256_mul_pd(rz, rz));
        const __m256d jv = _mm256_set_pd(double(j + 3), double(j + 2),
                                         double(j + 1), double(j));
        const __m256d mask = _mm256_cmp_pd(r2, vmin, _CMP_LT_OQ);
        vmin = _mm256_blendv_pd(vmin, r2, mask);
        vidx = _mm256_blendv_pd(vidx, jv, mask);
        vt = _mm256_blendv_pd(vt, t, mask);
    }
    NearestSegResult best{0, 1e300, 0.0};
    alignas(32) double vals[4], idxs[4], ts[4];
    _mm256_store_pd(vals, vmin);
    _mm256_store_pd(idxs, vidx);
    _mm256_store_pd(ts, vt);
    for (int lane = 0; lane < 4; ++lane) {
        if (vals[lane] < best.dist2)
            best = {static_cast<std::size_t>(idxs[lane]), vals[lane], ts[lane]};
    }
    for (; j < n; ++j) {
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
