#include "nss/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <utility>

#include "nss/errors.hpp"

namespace nss {

struct Expression::Node {
    enum class Kind { Const, VarX, VarY, Add, Sub, Mul, Div, Pow, Neg, Fn } kind;
    double value = 0.0;
    double (*fn)(double) = nullptr;
    std::shared_ptr<const Node> lhs, rhs;

    double eval(double x, double y) const {
        switch (kind) {
            case Kind::Const: return value;
            case Kind::VarX: return x;
            case Kind::VarY: return y;
            case Kind::Add: return lhs->eval(x, y) + rhs->eval(x, y);
            case Kind::Sub: return lhs->eval(x, y) - rhs->eval(x, y);
            case Kind::Mul: return lhs->eval(x, y) * rhs->eval(x, y);
            case Kind::Div: return lhs->eval(x, y) / rhs->eval(x, y);
            case Kind::Pow: return std::pow(lhs->eval(x, y), rhs->eval(x, y));
            case Kind::Neg: return -lhs->eval(x, y);
            case Kind::Fn: return fn(lhs->eval(x, y));
        }
        return 0.0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ExpressionError(msg + " at position " + std::to_string(pos) + " in '" + s + "'");
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (consume('+'))
                lhs = make({Node::Kind::Add, 0, nullptr, lhs, parse_term()});
            else if (consume('-'))
                lhs = make({Node::Kind::Sub, 0, nullptr, lhs, parse_term()});
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (consume('*'))
                lhs = make({Node::Kind::Mul, 0, nullptr, lhs, parse_unary()});
            else if (consume('/'))
                lhs = make({Node::Kind::Div, 0, nullptr, lhs, parse_unary()});
            else
                return lhs;
        }
    }

    NodePtr parse_unary() {
        if (consume('-')) return make({Node::Kind::Neg, 0, nullptr, parse_unary(), nullptr});
        if (consume('+')) return parse_unary();
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (consume('^'))  // right associative
            return make({Node::Kind::Pow, 0, nullptr, base, parse_unary()});
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression");
        const char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        if (consume('(')) {
            NodePtr inner = parse_expr();
            if (!consume(')')) fail("missing ')'");
            return inner;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_number() {
        size_t start = pos;
        char* end = nullptr;
        const double v = std::strtod(s.c_str() + start, &end);
        if (end == s.c_str() + start) fail("bad number");
        pos = static_cast<size_t>(end - s.c_str());
        return make({Node::Kind::Const, v, nullptr, nullptr, nullptr});
    }

    NodePtr parse_ident() {
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        const std::string name = s.substr(start, pos - start);
        if (name == "x") return make({Node::Kind::VarX, 0, nullptr, nullptr, nullptr});
        if (name == "y") return make({Node::Kind::VarY, 0, nullptr, nullptr, nullptr});
        if (name == "pi")
            return make({Node::Kind::Const, std::numbers::pi, nullptr, nullptr, nullptr});
        static const std::pair<const char*, double (*)(double)> fns[] = {
            {"sin", std::sin},   {"cos", std::cos},   {"tan", std::tan},
            {"sinh", std::sinh}, {"cosh", std::cosh}, {"tanh", std::tanh},
            {"exp", std::exp},   {"log", std::log},   {"sqrt", std::sqrt},
            {"abs", std::fabs},
        };
        for (const auto& [fname, fptr] : fns) {
            if (name == fname) {
                if (!consume('(')) fail("function '" + name + "' needs '('");
                NodePtr arg = parse_expr();
                if (!consume(')')) fail("missing ')' after function argument");
                return make({Node::Kind::Fn, 0, fptr, arg, nullptr});
            }
        }
        fail("unknown identifier '" + name + "'");
    }
};

}  // namespace

Expression Expression::parse(const std::string& text) {
    Parser p(text);
    Expression e;
    NodePtr root = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    e.root_ = root;
    return e;
}

double Expression::eval(double x, double y) const { return root_->eval(x, y); }

}  // namespace nss
