#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ptlab::dsl {

enum class NodeKind {
    constant,
    variable, // 1-based index
    add,
    sub,
    mul,
    div,
    pow_int, // integer exponent in `index`
    neg,
    sin,
    cos,
    exp,
    sqrt,
};

struct ExprNode {
    NodeKind kind;
    double value = 0.0; // constant payload
    int index = 0;      // variable index or integer exponent
    std::shared_ptr<const ExprNode> a, b;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

ExprPtr make_constant(double v);
ExprPtr make_variable(int index);
ExprPtr make_unary(NodeKind kind, ExprPtr a);
ExprPtr make_binary(NodeKind kind, ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr base, int exponent);

// Highest variable index referenced by the expression.
int max_variable(const ExprNode& e);

// Canonical rendering; parse(pretty(parse(s))) prints identically.
std::string pretty(const ExprNode& e);

// Parses one expression; `offset` reports errors relative to the enclosing
// source. Trailing garbage is a SyntaxError.
ExprPtr parse_expression(const std::string& text, std::size_t offset = 0);

// Splits on top-level ';' and parses each component.
std::vector<ExprPtr> parse_components(const std::string& source);

} // namespace ptlab::dsl
