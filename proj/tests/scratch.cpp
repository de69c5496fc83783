#include <cstdio>
#include "ptlab/error.hpp"
#include "ptlab/dsl/builtins.hpp"
#include "ptlab/preimage/pipeline.hpp"
#include "ptlab/preimage/trace.hpp"
#include "ptlab/trans/transversality.hpp"
#include "ptlab/geom/linking.hpp"
using namespace ptlab;
int main() try {
    // winding:3 full pipeline
    auto f = dsl::builtin_map("winding:3");
    auto P = preimage::pontryagin_manifold(*f, 1, 0, 7);
    std::printf("winding:3 points=%zu y=%g\n", P.points().points.size(), P.regular_value[0]);
    for (auto& p : P.points().points)
        std::printf("  x=%.6f frame=%.6f sign=%+d\n", p.x[0], p.frame(0,0), p.frame(0,0) > 0 ? 1 : -1);

    // circle fiber
    auto g = dsl::parse_map("x1^2 + x2^2", 2, 1, 8.0, false);
    Eigen::VectorXd one(1); one << 1.0;
    auto loops = preimage::trace_preimage_loops(*g, one, 1e-2, 3, 0);
    std::printf("circle fiber loops=%zu samples=%zu\n", loops.size(), loops[0].samples.size());
    double maxerr = 0;
    for (auto& s : loops[0].samples) maxerr = std::max(maxerr, std::abs(s.norm() - 1.0));
    std::printf("max radial err=%.2e\n", maxerr);

    // hopf pipeline
    auto h = dsl::builtin_map("hopf");
    auto PH = preimage::pontryagin_manifold(*h, 2, 1, 1);
    std::printf("hopf components=%zu y=(%g,%g)\n", PH.loops().components.size(),
                PH.regular_value[0], PH.regular_value[1]);
    auto& loop = PH.loops().components[0];
    std::printf("hopf loop samples=%zu length=%g\n", loop.loop.samples.size(), geom::loop_length(loop.loop));

    // second fiber, check linking
    Eigen::VectorXd y2 = PH.regular_value + Eigen::Vector2d(0.8, 0.3);
    auto PH2 = preimage::extract_at(*h, y2, 2, 1, 5);
    std::printf("hopf fiber2 components=%zu\n", PH2.loops().components.size());
    double lk = geom::gauss_linking(loop.loop, PH2.loops().components[0].loop);
    std::printf("linking of two hopf fibers = %.6f\n", lk);
    return 0;
} catch (const ptlab::Error& e) {
    std::printf("ERROR %s: %s\n", e.code_name(), e.what());
    return 1;
}
