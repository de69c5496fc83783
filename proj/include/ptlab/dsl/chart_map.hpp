#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "ptlab/dsl/ast.hpp"

namespace ptlab::dsl {

enum class EvalStatus { finite, infinite, undefined };

// Map evaluation with the compactified-target sentinel: `infinite` reads as
// the basepoint of R^n ∪ {∞}; `undefined` marks evaluation failures such as
// division by zero (the measure-zero pole set of a chart representation).
struct Eval {
    EvalStatus status = EvalStatus::finite;
    Eigen::VectorXd y;
    Eigen::MatrixXd jacobian; // filled by jet() only

    bool finite() const { return status == EvalStatus::finite; }
};

// A smooth map between chart spaces, evaluable with its exact differential.
// Parsed maps, collapse maps, compositions, and homotopy slices all share
// this interface so the preimage machinery consumes them interchangeably.
class SmoothMap {
public:
    virtual ~SmoothMap() = default;
    virtual int domain_dim() const = 0;
    virtual int codomain_dim() const = 0;
    // Finite action is declared to live in the closed ball of this radius.
    virtual double support_radius() const = 0;
    virtual Eval value(const Eigen::VectorXd& x) const = 0;
    virtual Eval jet(const Eigen::VectorXd& x) const = 0;
    virtual std::string describe() const = 0;
};

using MapPtr = std::shared_ptr<const SmoothMap>;

// A map parsed from the expression DSL, in chart coordinates on R^m with the
// convention that everything outside the support ball reads as ∞ when
// `infinity_outside` is set.
class ChartMap final : public SmoothMap {
public:
    ChartMap(std::vector<ExprPtr> components, int domain_dim,
             double support_radius, bool infinity_outside, std::string name = {});

    int domain_dim() const override { return m_; }
    int codomain_dim() const override { return static_cast<int>(components_.size()); }
    double support_radius() const override { return support_radius_; }
    bool infinity_outside() const { return infinity_outside_; }

    Eval value(const Eigen::VectorXd& x) const override;
    Eval jet(const Eigen::VectorXd& x) const override;
    std::string describe() const override;

    const std::vector<ExprPtr>& components() const { return components_; }
    std::string pretty() const;

private:
    std::vector<ExprPtr> components_;
    int m_;
    double support_radius_;
    bool infinity_outside_;
    std::string name_;
};

// Parses `n` semicolon-separated expressions in variables x1..xm.
// SyntaxError is position-annotated; ArityError reports a bad variable index
// or component count.
std::shared_ptr<const ChartMap> parse_map(const std::string& source, int m, int n,
                                          double support_radius = 10.0,
                                          bool infinity_outside = false);

// Exact forward-mode value and differential at an interior point; throws
// DomainError on evaluation failure or when the map reads ∞ at x.
std::pair<Eigen::VectorXd, Eigen::MatrixXd>
evaluate_with_jacobian(const SmoothMap& f, const Eigen::VectorXd& x);

// The f(x) = f0(x) + shift adapter; Jacobian unchanged.
MapPtr shift_output(MapPtr f, Eigen::VectorXd shift);

// The f(x) = f0(x + offset) adapter; Jacobian unchanged.
MapPtr shift_input(MapPtr f, Eigen::VectorXd offset);

// Composition g ∘ f with chain-rule Jacobian.
MapPtr compose(MapPtr g, MapPtr f);

// Freezes the last coordinate of a map on R^{m+1} at the given value.
MapPtr freeze_last(MapPtr f, double t);

} // namespace ptlab::dsl
