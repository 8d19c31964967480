#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "borpi/bigreal.hpp"
#include "borpi/precision.hpp"

namespace borpi {

// Exact rational, used for expression leaves and for Pochhammer parameters.
struct Rational {
    long num = 0;
    long den = 1;
};

// Immutable expression tree over rationals with +, -, *, /, square root and
// fourth root. Exact representation of algebraic initial values: evaluation
// at any precision starts from the tree, never from a decimal transcription.
// Nodes are shared; copies are cheap and safe to use across threads.
class RadicalExpr {
public:
    RadicalExpr() : RadicalExpr(rational(0)) {}

    static RadicalExpr rational(long num, long den = 1);
    static RadicalExpr rational(Rational r) { return rational(r.num, r.den); }
    static RadicalExpr add(RadicalExpr a, RadicalExpr b);
    static RadicalExpr sub(RadicalExpr a, RadicalExpr b);
    static RadicalExpr mul(RadicalExpr a, RadicalExpr b);
    static RadicalExpr div(RadicalExpr a, RadicalExpr b);
    static RadicalExpr sqrt(RadicalExpr a);
    static RadicalExpr root4(RadicalExpr a);

    friend RadicalExpr operator+(RadicalExpr a, RadicalExpr b) { return add(std::move(a), std::move(b)); }
    friend RadicalExpr operator-(RadicalExpr a, RadicalExpr b) { return sub(std::move(a), std::move(b)); }
    friend RadicalExpr operator*(RadicalExpr a, RadicalExpr b) { return mul(std::move(a), std::move(b)); }
    friend RadicalExpr operator/(RadicalExpr a, RadicalExpr b) { return div(std::move(a), std::move(b)); }

    // Infix rendering in the grammar accepted by parse_radical.
    std::string to_string() const;

    friend BigReal eval(const RadicalExpr& expr, const PrecisionContext& ctx);

    struct Node;  // defined in radical.cpp

private:
    explicit RadicalExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Evaluates the tree under a context. Throws DomainError on division by
// zero or a negative radicand anywhere in the tree.
BigReal eval(const RadicalExpr& expr, const PrecisionContext& ctx);

// Parses the small infix grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | primary
//   primary:= INTEGER | '(' expr ')' | 'sqrt' '(' expr ')' | 'root4' '(' expr ')'
//
// Rationals are written as quotients, e.g. "3/2" or "(1+sqrt(5))/2".
RadicalExpr parse_radical(std::string_view text);

}  // namespace borpi
