#include "ptlab/preimage/trace.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_set>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "ptlab/error.hpp"
#include "ptlab/preimage/solve.hpp"

namespace ptlab::preimage {

namespace {

// Spatial hash of visited cells at resolution `cell`; the 3^d neighborhood
// query keeps re-seeded duplicates out.
class VisitedCells {
public:
    explicit VisitedCells(double cell) : cell_(cell) {}

    void mark(const Eigen::VectorXd& x) { cells_.insert(key(x)); }

    bool near_visited(const Eigen::VectorXd& x) const {
        const int dim = static_cast<int>(x.size());
        std::vector<long long> base(dim);
        for (int d = 0; d < dim; ++d) base[d] = coord(x[d]);
        std::vector<int> offs(dim, -1);
        while (true) {
            std::uint64_t h = 1469598103934665603ULL;
            for (int d = 0; d < dim; ++d) mix(h, base[d] + offs[d]);
            if (cells_.count(h)) return true;
            int d = 0;
            for (; d < dim; ++d) {
                if (++offs[d] <= 1) break;
                offs[d] = -1;
            }
            if (d == dim) return false;
        }
    }

private:
    long long coord(double v) const { return static_cast<long long>(std::floor(v / cell_)); }

    static void mix(std::uint64_t& h, long long v) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }

    std::uint64_t key(const Eigen::VectorXd& x) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int d = 0; d < x.size(); ++d) mix(h, coord(x[d]));
        return h;
    }

    double cell_;
    std::unordered_set<std::uint64_t> cells_;
};

// Unit kernel vector of the n x (n+1) differential; sign fixed by the first
// component exceeding 1e-12 being positive.
Eigen::VectorXd kernel_tangent(const Eigen::MatrixXd& jacobian, double tol) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jacobian, Eigen::ComputeFullV);
    const auto& sing = svd.singularValues();
    if (sing[jacobian.rows() - 1] < tol)
        raise(ErrorCode::not_regular,
              "kernel dimension exceeds 1 along the traced fiber");
    Eigen::VectorXd t = svd.matrixV().col(jacobian.cols() - 1);
    for (int i = 0; i < t.size(); ++i) {
        if (std::abs(t[i]) > 1e-12) {
            if (t[i] < 0) t = -t;
            break;
        }
    }
    return t;
}

struct StepBudget {
    int remaining;
    void spend() {
        if (--remaining < 0)
            raise(ErrorCode::continuation_failed, "continuation budget exhausted");
    }
};

struct TraceResult {
    std::vector<Eigen::VectorXd> samples;
    bool closed = false;
    bool hit_boundary = false; // slab mode only
    int boundary_face = -1;
};

struct TraceConfig {
    double step;
    double min_step;
    double support_radius;
    bool slab_mode = false; // last coordinate confined to [0,1]
    double residual;
};

// Core predictor-corrector walk from x0 along +dir0. Stops on closure
// (distance to x0 below step after at least 8 samples and a quarter turn of
// travel), on slab-face exit, or on budget/step-floor failure.
TraceResult trace_from(const dsl::SmoothMap& f, const Eigen::VectorXd& y,
                       const Eigen::VectorXd& x0, const Eigen::VectorXd& dir0,
                       const TraceConfig& cfg, const PipelineParams& params,
                       StepBudget& budget) {
    TraceResult out;
    out.samples.push_back(x0);
    Eigen::VectorXd x = x0;
    Eigen::VectorXd tan = dir0;
    double h = cfg.step;
    double travelled = 0.0;
    const int t_index = static_cast<int>(x0.size()) - 1;

    while (true) {
        budget.spend();
        const Eigen::VectorXd pred = x + h * tan;
        auto corrected = project_to_fiber(f, y, pred, params);
        bool ok = corrected.has_value();
        Eigen::VectorXd next;
        Eigen::VectorXd next_tan;
        if (ok) {
            next = *corrected;
            dsl::Eval e = f.jet(next);
            if (!e.finite()) {
                ok = false;
            } else {
                next_tan = kernel_tangent(e.jacobian, params.tol);
                if (next_tan.dot(tan) < 0) next_tan = -next_tan;
                const double hop = (next - x).norm();
                // reject wild steps and sharp turns
                if (hop > 2.5 * h || next_tan.dot(tan) < 0.5) ok = false;
            }
        }
        if (!ok) {
            h *= 0.5;
            if (h < cfg.min_step)
                raise(ErrorCode::continuation_failed,
                      "corrector failed at the minimum step size");
            continue;
        }

        if (cfg.slab_mode) {
            const double t_new = next[t_index];
            if (t_new < 0.0 || t_new > 1.0) {
                // refine the crossing onto the face by solving the frozen slice
                const double t_face = t_new < 0.0 ? 0.0 : 1.0;
                Eigen::VectorXd guess = x;
                const double t_old = x[t_index];
                const double lam = std::abs(t_new - t_old) < 1e-300
                                       ? 0.0
                                       : (t_face - t_old) / (t_new - t_old);
                guess = x + lam * (next - x);
                // square solve in the x-part with t frozen
                struct Frozen final : dsl::SmoothMap {
                    const dsl::SmoothMap& f;
                    double tf;
                    int ti;
                    Frozen(const dsl::SmoothMap& m, double t, int i) : f(m), tf(t), ti(i) {}
                    int domain_dim() const override { return f.domain_dim() - 1; }
                    int codomain_dim() const override { return f.codomain_dim(); }
                    double support_radius() const override { return f.support_radius(); }
                    Eigen::VectorXd lift(const Eigen::VectorXd& x) const {
                        Eigen::VectorXd z(x.size() + 1);
                        z.head(x.size()) = x;
                        z[ti] = tf;
                        return z;
                    }
                    dsl::Eval value(const Eigen::VectorXd& x) const override {
                        return f.value(lift(x));
                    }
                    dsl::Eval jet(const Eigen::VectorXd& x) const override {
                        dsl::Eval e = f.jet(lift(x));
                        if (e.finite())
                            e.jacobian = e.jacobian.leftCols(ti).eval();
                        return e;
                    }
                    std::string describe() const override { return "slice"; }
                } frozen(f, t_face, t_index);
                auto end_x = newton_square(frozen, y, guess.head(t_index), params);
                if (!end_x)
                    raise(ErrorCode::continuation_failed,
                          "failed to land the arc endpoint on the slab face");
                Eigen::VectorXd endpoint(x.size());
                endpoint.head(t_index) = *end_x;
                endpoint[t_index] = t_face;
                out.samples.push_back(endpoint);
                out.hit_boundary = true;
                out.boundary_face = t_face > 0.5 ? 1 : 0;
                return out;
            }
        }

        Eigen::VectorXd spatial = next;
        if (cfg.slab_mode) spatial = next.head(t_index);
        if (spatial.norm() > cfg.support_radius)
            raise(ErrorCode::escaped_support,
                  "traced fiber escaped the declared support ball");

        out.samples.push_back(next);
        travelled += (next - x).norm();
        x = next;
        tan = next_tan;
        if (h < cfg.step) h = std::min(cfg.step, 1.5 * h);

        // closure test against the start point
        if (out.samples.size() >= 8 && travelled > 4.0 * cfg.step &&
            (x - x0).norm() <= cfg.step) {
            out.closed = true;
            out.samples.push_back(x0);
            return out;
        }
    }
}

geom::PolyLoop to_loop(std::vector<Eigen::VectorXd> samples, bool closed) {
    geom::PolyLoop loop;
    loop.samples = std::move(samples);
    loop.closed = closed;
    // drop consecutive duplicates that refinement may have produced
    std::vector<Eigen::VectorXd> cleaned;
    cleaned.reserve(loop.samples.size());
    for (const auto& s : loop.samples) {
        if (cleaned.empty() || (cleaned.back() - s).norm() > 1e-13) cleaned.push_back(s);
    }
    if (closed && (cleaned.back() - cleaned.front()).norm() > 1e-13)
        cleaned.push_back(cleaned.front());
    else if (closed)
        cleaned.back() = cleaned.front();
    loop.samples = std::move(cleaned);
    return loop;
}

} // namespace

std::vector<geom::PolyLoop> trace_preimage_loops(const dsl::SmoothMap& f,
                                                 const Eigen::VectorXd& y, double step,
                                                 std::uint64_t rng_seed, int budget,
                                                 const PipelineParams& params) {
    if (f.domain_dim() != f.codomain_dim() + 1)
        raise(ErrorCode::dimension_mismatch,
              "loop fibers need domain dimension = codomain dimension + 1");
    if (step <= 0.0) raise(ErrorCode::precondition_violated, "step must be positive");

    const int scatter_seeds = 512;
    std::vector<Eigen::VectorXd> starts =
        scatter_on_fiber(f, y, rng_seed, scatter_seeds, params.dedup_radius, params);

    StepBudget steps{budget > 0 ? budget : params.trace_budget};
    VisitedCells visited(step);
    std::vector<geom::PolyLoop> loops;

    for (const auto& start : starts) {
        if (visited.near_visited(start)) continue;
        dsl::Eval e = f.jet(start);
        if (!e.finite()) continue;
        Eigen::VectorXd dir = kernel_tangent(e.jacobian, params.tol);

        double h = step;
        while (true) {
            TraceConfig cfg{h, params.min_step, f.support_radius(), false,
                            params.loop_residual};
            TraceResult res = trace_from(f, y, start, dir, cfg, params, steps);
            if (!res.closed)
                raise(ErrorCode::continuation_failed, "fiber component did not close");
            if (res.samples.size() >= 9) {
                for (const auto& s : res.samples) visited.mark(s);
                loops.push_back(to_loop(std::move(res.samples), true));
                break;
            }
            // component smaller than 8 samples at this resolution: refine
            h *= 0.25;
            if (h < params.min_step)
                raise(ErrorCode::continuation_failed,
                      "fiber component is below the resolvable size");
        }
    }
    return loops;
}

std::vector<CobordismCurve> trace_cobordism(const dsl::SmoothMap& homotopy,
                                            const Eigen::VectorXd& y, double step,
                                            std::uint64_t rng_seed, int budget,
                                            const PipelineParams& params) {
    const int n = homotopy.codomain_dim();
    if (homotopy.domain_dim() != n + 1)
        raise(ErrorCode::dimension_mismatch,
              "a homotopy fiber needs domain dimension = codomain dimension + 1");
    const int t_index = n;

    StepBudget steps{budget > 0 ? budget : params.trace_budget};
    VisitedCells visited(step);
    std::vector<CobordismCurve> curves;

    auto trace_arc_or_loop = [&](const Eigen::VectorXd& start,
                                 const Eigen::VectorXd& dir) {
        TraceConfig cfg{step, params.min_step, homotopy.support_radius(), true,
                        params.loop_residual};
        return trace_from(homotopy, y, start, dir, cfg, params, steps);
    };

    auto face_points = [&](double t_face) {
        dsl::MapPtr slice = dsl::freeze_last(
            std::shared_ptr<const dsl::SmoothMap>(&homotopy, [](const dsl::SmoothMap*) {}),
            t_face);
        return solve_preimage_points(*slice, y, rng_seed + (t_face > 0.5 ? 1 : 0), 0,
                                     params);
    };

    // arcs seeded from both end fibers
    for (int face = 0; face <= 1; ++face) {
        const double t_face = static_cast<double>(face);
        for (const auto& xpart : face_points(t_face)) {
            Eigen::VectorXd start(n + 1);
            start.head(n) = xpart;
            start[t_index] = t_face;
            if (visited.near_visited(start)) continue;

            dsl::Eval e = homotopy.jet(start);
            if (!e.finite())
                raise(ErrorCode::not_regular, "homotopy undefined at an end fiber point");
            Eigen::VectorXd dir = kernel_tangent(e.jacobian, params.tol);
            const double inward = face == 0 ? 1.0 : -1.0;
            if (dir[t_index] * inward < 0) dir = -dir;
            if (std::abs(dir[t_index]) < 1e-10)
                raise(ErrorCode::not_regular,
                      "fiber tangent is parallel to the slab face at an endpoint");

            TraceResult res = trace_arc_or_loop(start, dir);
            if (!res.hit_boundary)
                raise(ErrorCode::continuation_failed,
                      "arc from a face point did not return to the boundary");
            for (const auto& s : res.samples) visited.mark(s);
            CobordismCurve curve;
            curve.curve = to_loop(std::move(res.samples), false);
            curve.start_face = face;
            curve.end_face = res.boundary_face;
            curves.push_back(std::move(curve));
        }
    }

    // closed components in the open slab
    std::vector<Eigen::VectorXd> interior = scatter_on_fiber(
        homotopy, y, rng_seed ^ 0x517cc1b727220a95ULL, 256, params.dedup_radius, params);
    for (const auto& start : interior) {
        const double t0 = start[t_index];
        if (t0 < 0.05 || t0 > 0.95) continue;
        if (visited.near_visited(start)) continue;
        dsl::Eval e = homotopy.jet(start);
        if (!e.finite()) continue;
        Eigen::VectorXd dir = kernel_tangent(e.jacobian, params.tol);
        TraceResult res = trace_arc_or_loop(start, dir);
        if (res.closed) {
            for (const auto& s : res.samples) visited.mark(s);
            CobordismCurve curve;
            curve.curve = to_loop(std::move(res.samples), true);
            curves.push_back(std::move(curve));
            continue;
        }
        if (!res.hit_boundary) continue;
        // an arc missed by the face seeding (tangent numerically parallel at
        // the face): trace the other direction and join
        TraceResult other = trace_arc_or_loop(start, Eigen::VectorXd(-dir));
        if (!other.hit_boundary) continue;
        std::vector<Eigen::VectorXd> joined(other.samples.rbegin(), other.samples.rend());
        joined.insert(joined.end(), res.samples.begin() + 1, res.samples.end());
        for (const auto& s : joined) visited.mark(s);
        CobordismCurve curve;
        curve.curve = to_loop(std::move(joined), false);
        curve.start_face = other.boundary_face;
        curve.end_face = res.boundary_face;
        curves.push_back(std::move(curve));
    }
    return curves;
}

} // namespace ptlab::preimage
