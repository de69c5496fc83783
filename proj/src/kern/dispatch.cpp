#include <cstdlib>
#include <cstring>

#include "ptlab/kern/kernels.hpp"

namespace ptlab::kern {

bool avx2_available() {
#if defined(PTLAB_HAVE_AVX2)
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

Backend active_backend() {
    static const Backend backend = [] {
        const char* env = std::getenv("PONTRYAGIN_KERNEL");
        if (env && std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (env && std::strcmp(env, "avx2") == 0)
            return avx2_available() ? Backend::avx2 : Backend::scalar;
        return avx2_available() ? Backend::avx2 : Backend::scalar;
    }();
    return backend;
}

const char* backend_name(Backend backend) {
    return backend == Backend::avx2 ? "avx2" : "scalar";
}

double linking_sum(const Points& ma, const Points& ea,
                   const Points& mb, const Points& eb) {
#if defined(PTLAB_HAVE_AVX2)
    if (active_backend() == Backend::avx2) return linking_sum_avx2(ma, ea, mb, eb);
#endif
    return linking_sum_scalar(ma, ea, mb, eb);
}

MinDistResult min_distance2(const Points& a, const Points& b) {
#if defined(PTLAB_HAVE_AVX2)
    if (active_backend() == Backend::avx2) return min_distance2_avx2(a, b);
#endif
    return min_distance2_scalar(a, b);
}

void close_pairs(const Points& pts, double thr, PairList& out, std::size_t cap) {
#if defined(PTLAB_HAVE_AVX2)
    if (active_backend() == Backend::avx2) {
        close_pairs_avx2(pts, thr, out, cap);
        return;
    }
#endif
    close_pairs_scalar(pts, thr, out, cap);
}

NearestSegResult nearest_segment(const Points& base, const Points& edge,
                                 const double* query) {
#if defined(PTLAB_HAVE_AVX2)
    if (active_backend() == Backend::avx2) return nearest_segment_avx2(base, edge, query);
#endif
    return nearest_segment_scalar(base, edge, query);
}

} // namespace ptlab::kern
