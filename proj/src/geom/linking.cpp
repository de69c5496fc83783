#include "ptlab/geom/linking.hpp"

#include <cmath>

#include "ptlab/error.hpp"
#include "ptlab/kern/kernels.hpp"

namespace ptlab::geom {

double gauss_linking(const PolyLoop& a, const PolyLoop& b) {
    if (a.ambient_dim() != 3 || b.ambient_dim() != 3)
        raise(ErrorCode::wrong_ambient_dimension, "linking integral needs loops in R^3");
    if (!a.closed || !b.closed)
        raise(ErrorCode::continuation_failed, "linking integral needs closed loops");
    if (min_sample_distance(a, b) < kLoopSeparationTol)
        raise(ErrorCode::loops_too_close,
              "loops come closer than the separation tolerance");

    const SegmentSoA sa = segments_soa(a);
    const SegmentSoA sb = segments_soa(b);
    const double sum = kern::linking_sum(sa.mid, sa.edge, sb.mid, sb.edge);
    return sum / (4.0 * M_PI);
}

} // namespace ptlab::geom
