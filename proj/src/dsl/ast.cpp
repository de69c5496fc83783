#include "ptlab/dsl/ast.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "ptlab/error.hpp"

namespace ptlab::dsl {

ExprPtr make_constant(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::constant;
    n->value = v;
    return n;
}

ExprPtr make_variable(int index) {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::variable;
    n->index = index;
    return n;
}

ExprPtr make_unary(NodeKind kind, ExprPtr a) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->a = std::move(a);
    return n;
}

ExprPtr make_binary(NodeKind kind, ExprPtr a, ExprPtr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

ExprPtr make_pow(ExprPtr base, int exponent) {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::pow_int;
    n->a = std::move(base);
    n->index = exponent;
    return n;
}

int max_variable(const ExprNode& e) {
    int m = e.kind == NodeKind::variable ? e.index : 0;
    if (e.a) m = std::max(m, max_variable(*e.a));
    if (e.b) m = std::max(m, max_variable(*e.b));
    return m;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { number, variable, func, plus, minus, star, slash, caret, lparen, rparen, semicolon, end };

struct Token {
    Tok kind;
    double number = 0.0;
    int index = 0;       // variable index
    NodeKind func{};     // sin/cos/exp/sqrt
    std::size_t pos = 0; // byte offset in the enclosing source
};

class Lexer {
public:
    Lexer(const std::string& text, std::size_t base) : text_(text), base_(base) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    [[noreturn]] void fail(std::size_t pos, const std::string& what) const {
        raise(ErrorCode::syntax_error,
              what + " at offset " + std::to_string(base_ + pos));
    }

    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= text_.size()) {
            tok_.kind = Tok::end;
            return;
        }
        // UTF-8 minus sign U+2212, accepted as '-'
        if (i_ + 2 < text_.size() && static_cast<unsigned char>(text_[i_]) == 0xE2 &&
            static_cast<unsigned char>(text_[i_ + 1]) == 0x88 &&
            static_cast<unsigned char>(text_[i_ + 2]) == 0x92) {
            i_ += 3;
            tok_.kind = Tok::minus;
            return;
        }
        char ch = text_[i_];
        switch (ch) {
        case '+': ++i_; tok_.kind = Tok::plus; return;
        case '-': ++i_; tok_.kind = Tok::minus; return;
        case '*': ++i_; tok_.kind = Tok::star; return;
        case '/': ++i_; tok_.kind = Tok::slash; return;
        case '^': ++i_; tok_.kind = Tok::caret; return;
        case '(': ++i_; tok_.kind = Tok::lparen; return;
        case ')': ++i_; tok_.kind = Tok::rparen; return;
        case ';': ++i_; tok_.kind = Tok::semicolon; return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            const char* start = text_.c_str() + i_;
            char* end = nullptr;
            double v = std::strtod(start, &end);
            if (end == start) fail(i_, "malformed number");
            i_ += static_cast<std::size_t>(end - start);
            tok_.kind = Tok::number;
            tok_.number = v;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])))) ++j;
            std::string word = text_.substr(i_, j - i_);
            if (word[0] == 'x' && word.size() > 1 &&
                std::all_of(word.begin() + 1, word.end(),
                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                tok_.kind = Tok::variable;
                tok_.index = std::atoi(word.c_str() + 1);
                i_ = j;
                return;
            }
            if (word == "sin") tok_.func = NodeKind::sin;
            else if (word == "cos") tok_.func = NodeKind::cos;
            else if (word == "exp") tok_.func = NodeKind::exp;
            else if (word == "sqrt") tok_.func = NodeKind::sqrt;
            else fail(i_, "unknown identifier '" + word + "'");
            tok_.kind = Tok::func;
            i_ = j;
            return;
        }
        fail(i_, std::string("unexpected character '") + ch + "'");
    }

    const std::string& text_;
    std::size_t base_;
    std::size_t i_ = 0;
    Token tok_;
};

// ---------------------------------------------------------------------------
// Recursive-descent parser
//
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := ('-'|'+') unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := number | variable | '(' expr ')' | func '(' expr ')'

class Parser {
public:
    Parser(const std::string& text, std::size_t base) : lex_(text, base), base_(base) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::end)
            raise(ErrorCode::syntax_error,
                  "unexpected token at offset " + std::to_string(base_ + t.pos));
        return e;
    }

private:
    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k != Tok::plus && k != Tok::minus) break;
            lex_.take();
            e = make_binary(k == Tok::plus ? NodeKind::add : NodeKind::sub, e, term());
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = unary();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k != Tok::star && k != Tok::slash) break;
            lex_.take();
            e = make_binary(k == Tok::star ? NodeKind::mul : NodeKind::div, e, unary());
        }
        return e;
    }

    ExprPtr unary() {
        Tok k = lex_.peek().kind;
        if (k == Tok::minus) {
            lex_.take();
            return make_unary(NodeKind::neg, unary());
        }
        if (k == Tok::plus) {
            lex_.take();
            return unary();
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (lex_.peek().kind == Tok::caret) {
            lex_.take();
            int sign = 1;
            if (lex_.peek().kind == Tok::minus) {
                lex_.take();
                sign = -1;
            }
            Token t = lex_.take();
            if (t.kind != Tok::number || t.number != std::floor(t.number))
                raise(ErrorCode::syntax_error,
                      "expected integer exponent at offset " + std::to_string(base_ + t.pos));
            return make_pow(base, sign * static_cast<int>(t.number));
        }
        return base;
    }

    ExprPtr atom() {
        Token t = lex_.take();
        switch (t.kind) {
        case Tok::number:
            return make_constant(t.number);
        case Tok::variable:
            if (t.index < 1)
                raise(ErrorCode::arity_error,
                      "variable index must be >= 1 at offset " + std::to_string(base_ + t.pos));
            return make_variable(t.index);
        case Tok::lparen: {
            ExprPtr e = expr();
            Token close = lex_.take();
            if (close.kind != Tok::rparen)
                raise(ErrorCode::syntax_error,
                      "expected ')' at offset " + std::to_string(base_ + close.pos));
            return e;
        }
        case Tok::func: {
            Token open = lex_.take();
            if (open.kind != Tok::lparen)
                raise(ErrorCode::syntax_error,
                      "expected '(' at offset " + std::to_string(base_ + open.pos));
            ExprPtr arg = expr();
            Token close = lex_.take();
            if (close.kind != Tok::rparen)
                raise(ErrorCode::syntax_error,
                      "expected ')' at offset " + std::to_string(base_ + close.pos));
            return make_unary(t.func, arg);
        }
        default:
            raise(ErrorCode::syntax_error,
                  "expected expression at offset " + std::to_string(base_ + t.pos));
        }
    }

    Lexer lex_;
    std::size_t base_;
};

int precedence(NodeKind k) {
    switch (k) {
    case NodeKind::add:
    case NodeKind::sub: return 1;
    case NodeKind::mul:
    case NodeKind::div: return 2;
    case NodeKind::neg: return 3;
    case NodeKind::pow_int: return 4;
    default: return 5;
    }
}

void render(const ExprNode& e, std::ostream& os, int parent_prec) {
    const int prec = precedence(e.kind);
    const bool parens = prec < parent_prec;
    if (parens) os << '(';
    switch (e.kind) {
    case NodeKind::constant: {
        std::ostringstream tmp;
        tmp.precision(17);
        tmp << e.value;
        std::string s = tmp.str();
        if (!s.empty() && s[0] == '-') {
            os << '(' << s << ')';
        } else {
            os << s;
        }
        break;
    }
    case NodeKind::variable: os << 'x' << e.index; break;
    case NodeKind::add:
        render(*e.a, os, prec);
        os << " + ";
        render(*e.b, os, prec + 1);
        break;
    case NodeKind::sub:
        render(*e.a, os, prec);
        os << " - ";
        render(*e.b, os, prec + 1);
        break;
    case NodeKind::mul:
        render(*e.a, os, prec);
        os << '*';
        render(*e.b, os, prec + 1);
        break;
    case NodeKind::div:
        render(*e.a, os, prec);
        os << '/';
        render(*e.b, os, prec + 1);
        break;
    case NodeKind::neg:
        os << '-';
        render(*e.a, os, prec + 1);
        break;
    case NodeKind::pow_int:
        render(*e.a, os, prec + 1);
        os << '^' << e.index;
        break;
    case NodeKind::sin: os << "sin("; render(*e.a, os, 0); os << ')'; break;
    case NodeKind::cos: os << "cos("; render(*e.a, os, 0); os << ')'; break;
    case NodeKind::exp: os << "exp("; render(*e.a, os, 0); os << ')'; break;
    case NodeKind::sqrt: os << "sqrt("; render(*e.a, os, 0); os << ')'; break;
    }
    if (parens) os << ')';
}

} // namespace

std::string pretty(const ExprNode& e) {
    std::ostringstream os;
    render(e, os, 0);
    return os.str();
}

ExprPtr parse_expression(const std::string& text, std::size_t offset) {
    return Parser(text, offset).parse();
}

std::vector<ExprPtr> parse_components(const std::string& source) {
    // Split on top-level semicolons, keeping byte offsets for errors.
    std::vector<ExprPtr> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= source.size(); ++i) {
        if (i < source.size()) {
            if (source[i] == '(') ++depth;
            else if (source[i] == ')') --depth;
        }
        if (i == source.size() || (source[i] == ';' && depth == 0)) {
            out.push_back(parse_expression(source.substr(start, i - start), start));
            start = i + 1;
        }
    }
    return out;
}

} // namespace ptlab::dsl
