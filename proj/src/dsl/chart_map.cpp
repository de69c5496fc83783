#include "ptlab/dsl/chart_map.hpp"

#include <cmath>
#include <sstream>

#include "ptlab/dsl/dual.hpp"
#include "ptlab/error.hpp"

namespace ptlab::dsl {

namespace {

template <typename T>
T eval_node(const ExprNode& e, const T* vars) {
    switch (e.kind) {
    case NodeKind::constant: return T(e.value);
    case NodeKind::variable: return vars[e.index - 1];
    case NodeKind::add: return eval_node<T>(*e.a, vars) + eval_node<T>(*e.b, vars);
    case NodeKind::sub: return eval_node<T>(*e.a, vars) - eval_node<T>(*e.b, vars);
    case NodeKind::mul: return eval_node<T>(*e.a, vars) * eval_node<T>(*e.b, vars);
    case NodeKind::div: return eval_node<T>(*e.a, vars) / eval_node<T>(*e.b, vars);
    case NodeKind::neg: return -eval_node<T>(*e.a, vars);
    case NodeKind::sin: return sin(eval_node<T>(*e.a, vars));
    case NodeKind::cos: return cos(eval_node<T>(*e.a, vars));
    case NodeKind::exp: return exp(eval_node<T>(*e.a, vars));
    case NodeKind::sqrt: return sqrt(eval_node<T>(*e.a, vars));
    case NodeKind::pow_int: {
        T base = eval_node<T>(*e.a, vars);
        int k = e.index;
        if (k == 0) return T(1.0);
        bool invert = k < 0;
        unsigned int p = invert ? static_cast<unsigned int>(-(long long)k)
                                : static_cast<unsigned int>(k);
        T acc(1.0);
        T cur = base;
        while (p > 0) {
            if (p & 1u) acc = acc * cur;
            cur = cur * cur;
            p >>= 1u;
        }
        if (invert) return T(1.0) / acc;
        return acc;
    }
    }
    raise(ErrorCode::domain_error, "corrupt expression node");
}

bool all_finite(const Eigen::VectorXd& v) { return v.allFinite(); }

} // namespace

ChartMap::ChartMap(std::vector<ExprPtr> components, int domain_dim,
                   double support_radius, bool infinity_outside, std::string name)
    : components_(std::move(components)), m_(domain_dim),
      support_radius_(support_radius), infinity_outside_(infinity_outside),
      name_(std::move(name)) {
    if (m_ < 1 || m_ > kMaxVars)
        raise(ErrorCode::arity_error, "domain dimension out of range 1.." +
                                          std::to_string(kMaxVars));
    if (components_.empty())
        raise(ErrorCode::arity_error, "map needs at least one component");
    if (support_radius_ <= 0.0)
        raise(ErrorCode::arity_error, "support radius must be positive");
    for (const auto& c : components_) {
        int used = max_variable(*c);
        if (used > m_)
            raise(ErrorCode::arity_error,
                  "component references x" + std::to_string(used) +
                      " but the domain has " + std::to_string(m_) + " variables");
    }
}

Eval ChartMap::value(const Eigen::VectorXd& x) const {
    Eval out;
    if (infinity_outside_ && x.norm() > support_radius_) {
        out.status = EvalStatus::infinite;
        return out;
    }
    out.y.resize(codomain_dim());
    try {
        for (int i = 0; i < codomain_dim(); ++i)
            out.y[i] = eval_node<double>(*components_[i], x.data());
    } catch (const Error&) {
        out.status = EvalStatus::undefined;
        return out;
    }
    if (!all_finite(out.y)) out.status = EvalStatus::undefined;
    return out;
}

Eval ChartMap::jet(const Eigen::VectorXd& x) const {
    Eval out;
    if (infinity_outside_ && x.norm() > support_radius_) {
        out.status = EvalStatus::infinite;
        return out;
    }
    const int n = codomain_dim();
    out.y.resize(n);
    out.jacobian.resize(n, m_);
    Dual vars[kMaxVars];
    for (int j = 0; j < m_; ++j) vars[j] = Dual::variable(x[j], j);
    try {
        for (int i = 0; i < n; ++i) {
            Dual r = eval_node<Dual>(*components_[i], vars);
            out.y[i] = r.v;
            for (int j = 0; j < m_; ++j) out.jacobian(i, j) = r.g[j];
        }
    } catch (const Error&) {
        out.status = EvalStatus::undefined;
        return out;
    }
    if (!all_finite(out.y) || !out.jacobian.allFinite())
        out.status = EvalStatus::undefined;
    return out;
}

std::string ChartMap::describe() const {
    if (!name_.empty()) return name_;
    return "chart map R^" + std::to_string(m_) + " -> R^" + std::to_string(codomain_dim());
}

std::string ChartMap::pretty() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) os << "; ";
        os << dsl::pretty(*components_[i]);
    }
    return os.str();
}

std::shared_ptr<const ChartMap> parse_map(const std::string& source, int m, int n,
                                          double support_radius, bool infinity_outside) {
    std::vector<ExprPtr> comps = parse_components(source);
    if (static_cast<int>(comps.size()) != n)
        raise(ErrorCode::arity_error,
              "expected " + std::to_string(n) + " components, got " +
                  std::to_string(comps.size()));
    return std::make_shared<ChartMap>(std::move(comps), m, support_radius, infinity_outside);
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd>
evaluate_with_jacobian(const SmoothMap& f, const Eigen::VectorXd& x) {
    if (x.size() != f.domain_dim())
        raise(ErrorCode::dimension_mismatch, "point dimension does not match the map domain");
    Eval e = f.jet(x);
    if (e.status == EvalStatus::infinite)
        raise(ErrorCode::domain_error, "map reads as infinity at the queried point");
    if (e.status == EvalStatus::undefined)
        raise(ErrorCode::domain_error, "map undefined at the queried point");
    return {e.y, e.jacobian};
}

// ---------------------------------------------------------------------------
// Adapters

namespace {

class ShiftedMap final : public SmoothMap {
public:
    ShiftedMap(MapPtr f, Eigen::VectorXd shift) : f_(std::move(f)), shift_(std::move(shift)) {}
    int domain_dim() const override { return f_->domain_dim(); }
    int codomain_dim() const override { return f_->codomain_dim(); }
    double support_radius() const override { return f_->support_radius(); }
    Eval value(const Eigen::VectorXd& x) const override {
        Eval e = f_->value(x);
        if (e.finite()) e.y += shift_;
        return e;
    }
    Eval jet(const Eigen::VectorXd& x) const override {
        Eval e = f_->jet(x);
        if (e.finite()) e.y += shift_;
        return e;
    }
    std::string describe() const override { return f_->describe() + " + t"; }

private:
    MapPtr f_;
    Eigen::VectorXd shift_;
};

class InputShiftedMap final : public SmoothMap {
public:
    InputShiftedMap(MapPtr f, Eigen::VectorXd offset)
        : f_(std::move(f)), offset_(std::move(offset)) {}
    int domain_dim() const override { return f_->domain_dim(); }
    int codomain_dim() const override { return f_->codomain_dim(); }
    double support_radius() const override {
        return f_->support_radius() + offset_.norm();
    }
    Eval value(const Eigen::VectorXd& x) const override { return f_->value(x + offset_); }
    Eval jet(const Eigen::VectorXd& x) const override { return f_->jet(x + offset_); }
    std::string describe() const override { return f_->describe() + " (shifted input)"; }

private:
    MapPtr f_;
    Eigen::VectorXd offset_;
};

class ComposedMap final : public SmoothMap {
public:
    ComposedMap(MapPtr g, MapPtr f) : g_(std::move(g)), f_(std::move(f)) {
        if (f_->codomain_dim() != g_->domain_dim())
            raise(ErrorCode::dimension_mismatch, "composition dimensions do not match");
    }
    int domain_dim() const override { return f_->domain_dim(); }
    int codomain_dim() const override { return g_->codomain_dim(); }
    double support_radius() const override { return f_->support_radius(); }
    Eval value(const Eigen::VectorXd& x) const override {
        Eval inner = f_->value(x);
        if (!inner.finite()) return inner;
        return g_->value(inner.y);
    }
    Eval jet(const Eigen::VectorXd& x) const override {
        Eval inner = f_->jet(x);
        if (!inner.finite()) return inner;
        Eval outer = g_->jet(inner.y);
        if (!outer.finite()) return outer;
        outer.jacobian = (outer.jacobian * inner.jacobian).eval();
        return outer;
    }
    std::string describe() const override {
        return g_->describe() + " . " + f_->describe();
    }

private:
    MapPtr g_, f_;
};

class FrozenLastMap final : public SmoothMap {
public:
    FrozenLastMap(MapPtr f, double t) : f_(std::move(f)), t_(t) {
        if (f_->domain_dim() < 2)
            raise(ErrorCode::dimension_mismatch, "cannot freeze the only coordinate");
    }
    int domain_dim() const override { return f_->domain_dim() - 1; }
    int codomain_dim() const override { return f_->codomain_dim(); }
    double support_radius() const override { return f_->support_radius(); }
    Eval value(const Eigen::VectorXd& x) const override { return f_->value(lift(x)); }
    Eval jet(const Eigen::VectorXd& x) const override {
        Eval e = f_->jet(lift(x));
        if (e.finite()) e.jacobian = e.jacobian.leftCols(domain_dim()).eval();
        return e;
    }
    std::string describe() const override {
        return f_->describe() + " at t=" + std::to_string(t_);
    }

private:
    Eigen::VectorXd lift(const Eigen::VectorXd& x) const {
        Eigen::VectorXd z(x.size() + 1);
        z.head(x.size()) = x;
        z[x.size()] = t_;
        return z;
    }
    MapPtr f_;
    double t_;
};

} // namespace

MapPtr shift_output(MapPtr f, Eigen::VectorXd shift) {
    return std::make_shared<ShiftedMap>(std::move(f), std::move(shift));
}

MapPtr shift_input(MapPtr f, Eigen::VectorXd offset) {
    return std::make_shared<InputShiftedMap>(std::move(f), std::move(offset));
}

MapPtr compose(MapPtr g, MapPtr f) {
    return std::make_shared<ComposedMap>(std::move(g), std::move(f));
}

MapPtr freeze_last(MapPtr f, double t) {
    return std::make_shared<FrozenLastMap>(std::move(f), t);
}

} // namespace ptlab::dsl
