#include "ptlab/geom/frame.hpp"

#include <Eigen/SVD>

#include "ptlab/error.hpp"

namespace ptlab::geom {

double min_singular_value(const Eigen::MatrixXd& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues().minCoeff();
}

Frame make_frame(const Eigen::MatrixXd& columns) {
    if (columns.cols() > columns.rows())
        raise(ErrorCode::degenerate_frame,
              "more frame vectors than ambient dimensions");
    if (min_singular_value(columns) < kFrameRankTol)
        raise(ErrorCode::degenerate_frame, "frame vectors are numerically dependent");
    return Frame{columns};
}

Frame gram_schmidt(const Eigen::MatrixXd& columns) {
    if (min_singular_value(columns) < kFrameRankTol)
        raise(ErrorCode::degenerate_frame, "input vectors are numerically dependent");
    Eigen::MatrixXd q = columns;
    for (int i = 0; i < q.cols(); ++i) {
        for (int pass = 0; pass < 2; ++pass) { // re-orthogonalize once
            for (int j = 0; j < i; ++j)
                q.col(i) -= q.col(j).dot(q.col(i)) * q.col(j);
        }
        q.col(i).normalize();
    }
    return Frame{q};
}

} // namespace ptlab::geom
