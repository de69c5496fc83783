#include "ptlab/parallel.hpp"

#include <cstdlib>

namespace ptlab {

int max_threads() {
    static int cached = [] {
        const char* env = std::getenv("PONTRYAGIN_THREADS");
        if (!env) return 1;
        int v = std::atoi(env);
        if (v < 1) return 1;
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw > 0 && v > 4 * hw) v = 4 * hw;
        return v;
    }();
    return cached;
}

} // namespace ptlab
