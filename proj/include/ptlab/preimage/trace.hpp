#pragma once

#include <cstdint>
#include <vector>

#include "ptlab/dsl/chart_map.hpp"
#include "ptlab/geom/polyloop.hpp"
#include "ptlab/params.hpp"

namespace ptlab::preimage {

// Closed components of the fiber f^{-1}(y) for f: R^{n+1} -> R^n, traced by
// predictor-corrector continuation along the kernel of df. Components are
// discovered by re-seeding from fiber points in unvisited grid cells.
// Throws NotRegular (kernel dimension != 1), ContinuationFailed (no closure
// within budget), EscapedSupport (fiber leaves the support ball).
std::vector<geom::PolyLoop> trace_preimage_loops(const dsl::SmoothMap& f,
                                                 const Eigen::VectorXd& y, double step,
                                                 std::uint64_t rng_seed, int budget,
                                                 const PipelineParams& params = {});

// One component of a fiber inside the slab R^n x [0,1]: a closed loop in the
// open slab or an arc whose endpoints lie exactly on the faces t in {0,1}.
struct CobordismCurve {
    geom::PolyLoop curve; // ambient dim n+1, last coordinate is t
    int start_face = -1;  // 0 or 1; -1 when closed
    int end_face = -1;
};

// Fiber of a homotopy H: R^n x [0,1] -> R^n over y, with boundary handling:
// arcs stop exactly on the faces and their endpoints reproduce the end
// fibers of the frozen slices.
std::vector<CobordismCurve> trace_cobordism(const dsl::SmoothMap& homotopy,
                                            const Eigen::VectorXd& y, double step,
                                            std::uint64_t rng_seed, int budget,
                                            const PipelineParams& params = {});

} // namespace ptlab::preimage
