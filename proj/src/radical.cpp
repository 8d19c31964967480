#include "borpi/radical.hpp"

#include <cctype>
#include <utility>

#include "borpi/errors.hpp"

namespace borpi {

enum class NodeKind { Rational, Add, Sub, Mul, Div, Sqrt, Root4 };

struct RadicalExpr::Node {
    NodeKind kind;
    long num = 0;
    long den = 1;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const RadicalExpr::Node>;

NodePtr make_node(NodeKind kind, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<RadicalExpr::Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

BigReal eval_node(const RadicalExpr::Node& n, const PrecisionContext& ctx) {
    switch (n.kind) {
        case NodeKind::Rational:
            return BigReal::rational(n.num, n.den, ctx);
        case NodeKind::Add:
            return eval_node(*n.lhs, ctx) + eval_node(*n.rhs, ctx);
        case NodeKind::Sub:
            return eval_node(*n.lhs, ctx) - eval_node(*n.rhs, ctx);
        case NodeKind::Mul:
            return eval_node(*n.lhs, ctx) * eval_node(*n.rhs, ctx);
        case NodeKind::Div: {
            BigReal denom = eval_node(*n.rhs, ctx);
            if (denom.is_zero()) throw DomainError("division by zero in expression");
            return eval_node(*n.lhs, ctx) / denom;
        }
        case NodeKind::Sqrt: {
            BigReal arg = eval_node(*n.lhs, ctx);
            if (arg.sign() < 0) throw DomainError("negative radicand in expression");
            return sqrt(arg, ctx);
        }
        case NodeKind::Root4: {
            BigReal arg = eval_node(*n.lhs, ctx);
            if (arg.sign() < 0) throw DomainError("negative radicand in expression");
            return root4(arg, ctx);
        }
    }
    throw Error("corrupt expression node");
}

void render(const RadicalExpr::Node& n, std::string& out) {
    switch (n.kind) {
        case NodeKind::Rational:
            // p/q and negative leaves need parentheses to survive reparsing
            // inside a surrounding term
            if (n.num < 0 || n.den != 1) {
                out += '(';
                out += std::to_string(n.num);
                if (n.den != 1) {
                    out += '/';
                    out += std::to_string(n.den);
                }
                out += ')';
            } else {
                out += std::to_string(n.num);
            }
            return;
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div: {
            const char* op = n.kind == NodeKind::Add   ? "+"
                             : n.kind == NodeKind::Sub ? "-"
                             : n.kind == NodeKind::Mul ? "*"
                                                       : "/";
            out += '(';
            render(*n.lhs, out);
            out += op;
            render(*n.rhs, out);
            out += ')';
            return;
        }
        case NodeKind::Sqrt:
        case NodeKind::Root4:
            out += n.kind == NodeKind::Sqrt ? "sqrt(" : "root4(";
            render(*n.lhs, out);
            out += ')';
            return;
    }
}

}  // namespace

RadicalExpr RadicalExpr::rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Rational;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    n->num = num;
    n->den = den;
    return RadicalExpr(std::move(n));
}

RadicalExpr RadicalExpr::add(RadicalExpr a, RadicalExpr b) {
    return RadicalExpr(make_node(NodeKind::Add, std::move(a.node_), std::move(b.node_)));
}

RadicalExpr RadicalExpr::sub(RadicalExpr a, RadicalExpr b) {
    return RadicalExpr(make_node(NodeKind::Sub, std::move(a.node_), std::move(b.node_)));
}

RadicalExpr RadicalExpr::mul(RadicalExpr a, RadicalExpr b) {
    return RadicalExpr(make_node(NodeKind::Mul, std::move(a.node_), std::move(b.node_)));
}

RadicalExpr RadicalExpr::div(RadicalExpr a, RadicalExpr b) {
    return RadicalExpr(make_node(NodeKind::Div, std::move(a.node_), std::move(b.node_)));
}

RadicalExpr RadicalExpr::sqrt(RadicalExpr a) {
    return RadicalExpr(make_node(NodeKind::Sqrt, std::move(a.node_), nullptr));
}

RadicalExpr RadicalExpr::root4(RadicalExpr a) {
    return RadicalExpr(make_node(NodeKind::Root4, std::move(a.node_), nullptr));
}

std::string RadicalExpr::to_string() const {
    std::string out;
    render(*node_, out);
    return out;
}

BigReal eval(const RadicalExpr& expr, const PrecisionContext& ctx) {
    return eval_node(*expr.node_, ctx);
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RadicalExpr parse() {
        RadicalExpr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input at offset " + std::to_string(pos_));
        return e;
    }

private:
    RadicalExpr expr() {
        RadicalExpr e = term();
        for (;;) {
            skip_ws();
            if (consume('+'))
                e = RadicalExpr::add(std::move(e), term());
            else if (consume('-'))
                e = RadicalExpr::sub(std::move(e), term());
            else
                return e;
        }
    }

    RadicalExpr term() {
        RadicalExpr e = factor();
        for (;;) {
            skip_ws();
            if (consume('*'))
                e = RadicalExpr::mul(std::move(e), factor());
            else if (consume('/'))
                e = RadicalExpr::div(std::move(e), factor());
            else
                return e;
        }
    }

    RadicalExpr factor() {
        skip_ws();
        if (consume('-'))
            return RadicalExpr::sub(RadicalExpr::rational(0), factor());
        return primary();
    }

    RadicalExpr primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (consume('(')) {
            RadicalExpr e = expr();
            expect(')');
            return e;
        }
        if (consume_word("sqrt")) {
            skip_ws();
            expect('(');
            RadicalExpr e = expr();
            expect(')');
            return RadicalExpr::sqrt(std::move(e));
        }
        if (consume_word("root4")) {
            skip_ws();
            expect('(');
            RadicalExpr e = expr();
            expect(')');
            return RadicalExpr::root4(std::move(e));
        }
        throw ParseError(std::string("unexpected character '") + c + "' at offset " +
                         std::to_string(pos_));
    }

    RadicalExpr number() {
        size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            int digit = text_[pos_] - '0';
            if (value > (9223372036854775807L - digit) / 10)
                throw ParseError("integer literal too large at offset " + std::to_string(start));
            value = value * 10 + digit;
            ++pos_;
        }
        if (pos_ < text_.size() && text_[pos_] == '.')
            throw ParseError("decimal literals are not accepted; write a quotient like 1/2");
        return RadicalExpr::rational(value);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool consume_word(std::string_view w) {
        if (text_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (!consume(c))
            throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

RadicalExpr parse_radical(std::string_view text) {
    return Parser(text).parse();
}

}  // namespace borpi
