#include "ptlab/dsl/builtins.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

#include "ptlab/dsl/dual.hpp"
#include "ptlab/error.hpp"

namespace ptlab::dsl {

namespace {

// The constant basepoint map: every point of the compactified source reads
// as ∞ in the target.
class AlwaysInfinityMap final : public SmoothMap {
public:
    AlwaysInfinityMap(int m, int n, std::string name)
        : m_(m), n_(n), name_(std::move(name)) {}
    int domain_dim() const override { return m_; }
    int codomain_dim() const override { return n_; }
    double support_radius() const override { return 1.0; }
    Eval value(const Eigen::VectorXd&) const override {
        Eval e;
        e.status = EvalStatus::infinite;
        return e;
    }
    Eval jet(const Eigen::VectorXd& x) const override { return value(x); }
    std::string describe() const override { return name_; }

private:
    int m_, n_;
    std::string name_;
};

std::string identity_source(int n) {
    std::ostringstream os;
    for (int i = 1; i <= n; ++i) {
        if (i > 1) os << "; ";
        os << 'x' << i;
    }
    return os.str();
}

std::string reflection_source(int n) {
    std::ostringstream os;
    for (int i = 1; i < n; ++i) os << 'x' << i << "; ";
    os << "-x" << n;
    return os.str();
}

std::string render_poly(const std::vector<long long>& coeff) {
    // coeff[p] multiplies x1^p
    std::ostringstream os;
    bool first = true;
    for (int p = static_cast<int>(coeff.size()) - 1; p >= 0; --p) {
        long long c = coeff[p];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long a = c < 0 ? -c : c;
        if (p == 0) {
            os << a;
        } else {
            if (a != 1) os << a << '*';
            os << "x1";
            if (p > 1) os << '^' << p;
        }
    }
    if (first) os << '0';
    return os.str();
}

// Chart form of z -> z^d on the circle. With u = (t - i)/(t + i) on the unit
// circle and (t - i)^|d| = P(t) + i·Q(t), the degree-d map reads
// t -> -P/Q for d > 0 and t -> +P/Q for d < 0.
std::string winding_source(int d) {
    const int a = d < 0 ? -d : d;
    std::vector<std::pair<long long, long long>> poly{{1, 0}}; // complex coefficients
    for (int s = 0; s < a; ++s) {
        std::vector<std::pair<long long, long long>> next(poly.size() + 1, {0, 0});
        for (std::size_t p = 0; p < poly.size(); ++p) {
            next[p + 1].first += poly[p].first; // * t
            next[p + 1].second += poly[p].second;
            next[p].first += poly[p].second;    // * (-i): (re,im)*(0,-1) = (im,-re)
            next[p].second -= poly[p].first;
        }
        poly = std::move(next);
    }
    std::vector<long long> P(poly.size()), Q(poly.size());
    for (std::size_t p = 0; p < poly.size(); ++p) {
        P[p] = poly[p].first;
        Q[p] = poly[p].second;
    }
    if (d > 0)
        for (auto& c : P) c = -c;
    // normalize so the denominator's leading coefficient is positive
    long long lead = 0;
    for (int p = static_cast<int>(Q.size()) - 1; p >= 0 && lead == 0; --p) lead = Q[p];
    if (lead < 0) {
        for (auto& c : P) c = -c;
        for (auto& c : Q) c = -c;
    }
    std::ostringstream os;
    os << '(' << render_poly(P) << ")/(" << render_poly(Q) << ')';
    return os.str();
}

// Chart form of the Hopf map: inverse stereographic R^3 -> S^3 ⊂ C^2 from
// the pole (0,0,0,1), then (z1,z2) -> (2·z1·conj(z2), |z1|^2 - |z2|^2) into
// S^2, then stereographic S^2 -> R^2 from (0,0,1). Unit spheres throughout.
std::string hopf_source() {
    const std::string s = "(x1^2 + x2^2 + x3^2)";
    const std::string den = "(" + s + "^2 + 1 - 2*x1^2 - 2*x2^2 + 2*x3^2)";
    return "2*(2*x1*x3 + x2*(" + s + " - 1))/" + den +
           "; 2*(2*x2*x3 - x1*(" + s + " - 1))/" + den;
}

int parse_int(const std::string& text, const std::string& name) {
    char* end = nullptr;
    long v = std::strtol(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0')
        raise(ErrorCode::arity_error, "bad parameter in builtin name '" + name + "'");
    return static_cast<int>(v);
}

} // namespace

MapPtr builtin_map(const std::string& name) {
    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);

    if (head == "identity") {
        int n = parse_int(args, name);
        if (n < 1 || n > kMaxVars)
            raise(ErrorCode::unsupported_dimension, "identity:n supports n in 1.." +
                                                        std::to_string(kMaxVars));
        return std::make_shared<ChartMap>(parse_components(identity_source(n)), n, 8.0,
                                          true, name);
    }
    if (head == "reflection") {
        int n = parse_int(args, name);
        if (n < 1 || n > kMaxVars)
            raise(ErrorCode::unsupported_dimension, "reflection:n supports n in 1.." +
                                                        std::to_string(kMaxVars));
        return std::make_shared<ChartMap>(parse_components(reflection_source(n)), n, 8.0,
                                          true, name);
    }
    if (head == "winding") {
        int d = parse_int(args, name);
        if (d == 0) return std::make_shared<AlwaysInfinityMap>(1, 1, name);
        if (d < -9 || d > 9)
            raise(ErrorCode::unsupported_dimension, "winding:d supports |d| <= 9");
        return std::make_shared<ChartMap>(parse_components(winding_source(d)), 1, 8.0,
                                          true, name);
    }
    if (head == "constant-inf") {
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            raise(ErrorCode::arity_error, "constant-inf needs n,k");
        int n = parse_int(args.substr(0, comma), name);
        int k = parse_int(args.substr(comma + 1), name);
        if (n < 1 || k < 0 || n + k > kMaxVars)
            raise(ErrorCode::unsupported_dimension, "constant-inf:n,k out of range");
        return std::make_shared<AlwaysInfinityMap>(n + k, n, name);
    }
    if (head == "hopf") {
        return std::make_shared<ChartMap>(parse_components(hopf_source()), 3, 12.0, true,
                                          name);
    }
    raise(ErrorCode::arity_error, "unknown builtin map '" + name + "'");
}

std::vector<std::string> builtin_zoo() {
    return {
        "identity:1",  "identity:2",  "identity:3",
        "winding:-3",  "winding:-2",  "winding:-1", "winding:1", "winding:2", "winding:3",
        "reflection:1", "reflection:2", "reflection:3",
        "constant-inf:1,0", "constant-inf:2,1",
        "hopf",
    };
}

} // namespace ptlab::dsl
