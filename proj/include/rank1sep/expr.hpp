#pragma once

#include <cctype>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rank1sep {

/// Parsed arithmetic expression over one named variable. Supported grammar:
/// rational constants, + - * /, ^ (power), unary minus, parentheses, and the
/// functions sqrt, sin, cos, sinh, cosh, exp.
class Expr {
public:
    double operator()(double x) const { return eval(root_, x); }

    const std::string& source() const { return source_; }
    const std::string& variable() const { return var_; }

    /// Parse `src` as an expression in the variable `var`. Any other
    /// identifier (besides the function names) is an error.
    static Expr parse(const std::string& src, const std::string& var = "x")
    {
        Expr e;
        e.source_ = src;
        e.var_ = var;
        Parser p{src, 0, var};
        e.root_ = p.parse_expr();
        p.skip_ws();
        if (p.pos != src.size())
            throw std::invalid_argument("Expr: trailing input at position "
                + std::to_string(p.pos) + " in '" + src + "'");
        return e;
    }

private:
    enum class Op { constant, variable, add, sub, mul, div, pow, neg, call };

    struct Node {
        Op op;
        double value = 0.0;                  // constant
        int fn = -1;                         // call: index into kFunctions
        std::shared_ptr<Node> lhs, rhs;
    };
    using NodePtr = std::shared_ptr<Node>;

    static constexpr const char* kFunctions[] = {"sqrt", "sin", "cos", "sinh", "cosh", "exp"};

    static double eval(const NodePtr& n, double x)
    {
        switch (n->op) {
        case Op::constant: return n->value;
        case Op::variable: return x;
        case Op::add: return eval(n->lhs, x) + eval(n->rhs, x);
        case Op::sub: return eval(n->lhs, x) - eval(n->rhs, x);
        case Op::mul: return eval(n->lhs, x) * eval(n->rhs, x);
        case Op::div: return eval(n->lhs, x) / eval(n->rhs, x);
        case Op::pow: return std::pow(eval(n->lhs, x), eval(n->rhs, x));
        case Op::neg: return -eval(n->lhs, x);
        case Op::call:
            switch (n->fn) {
            case 0: return std::sqrt(eval(n->lhs, x));
            case 1: return std::sin(eval(n->lhs, x));
            case 2: return std::cos(eval(n->lhs, x));
            case 3: return std::sinh(eval(n->lhs, x));
            case 4: return std::cosh(eval(n->lhs, x));
            default: return std::exp(eval(n->lhs, x));
            }
        }
        return 0.0;
    }

    struct Parser {
        const std::string& s;
        size_t pos;
        const std::string& var;

        void skip_ws()
        {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
                ++pos;
        }
        bool eat(char c)
        {
            skip_ws();
            if (pos < s.size() && s[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }
        [[noreturn]] void fail(const std::string& what)
        {
            throw std::invalid_argument(
                "Expr: " + what + " at position " + std::to_string(pos) + " in '" + s + "'");
        }

        static NodePtr make(Op op, NodePtr l = nullptr, NodePtr r = nullptr)
        {
            auto n = std::make_shared<Node>();
            n->op = op;
            n->lhs = std::move(l);
            n->rhs = std::move(r);
            return n;
        }

        NodePtr parse_expr()
        {
            NodePtr n = parse_term();
            for (;;) {
                if (eat('+'))
                    n = make(Op::add, n, parse_term());
                else if (eat('-'))
                    n = make(Op::sub, n, parse_term());
                else
                    return n;
            }
        }

        NodePtr parse_term()
        {
            NodePtr n = parse_unary();
            for (;;) {
                if (eat('*'))
                    n = make(Op::mul, n, parse_unary());
                else if (eat('/'))
                    n = make(Op::div, n, parse_unary());
                else
                    return n;
            }
        }

        NodePtr parse_unary()
        {
            if (eat('-'))
                return make(Op::neg, parse_unary());
            return parse_power();
        }

        NodePtr parse_power()
        {
            NodePtr base = parse_atom();
            if (eat('^')) // right-associative, binds tighter than unary minus below it
                return make(Op::pow, base, parse_unary());
            return base;
        }

        NodePtr parse_atom()
        {
            skip_ws();
            if (pos >= s.size())
                fail("unexpected end of input");
            char c = s[pos];
            if (c == '(') {
                ++pos;
                NodePtr n = parse_expr();
                if (!eat(')'))
                    fail("expected ')'");
                return n;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
                return parse_number();
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
                return parse_ident();
            fail(std::string("unexpected character '") + c + "'");
        }

        NodePtr parse_number()
        {
            size_t start = pos;
            while (pos < s.size()
                && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
                ++pos;
            auto n = make(Op::constant);
            try {
                size_t used = 0;
                n->value = std::stod(s.substr(start, pos - start), &used);
                if (used != pos - start)
                    fail("malformed number");
            } catch (const std::exception&) {
                fail("malformed number");
            }
            return n;
        }

        NodePtr parse_ident()
        {
            size_t start = pos;
            while (pos < s.size()
                && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            for (int f = 0; f < 6; ++f)
                if (name == kFunctions[f]) {
                    if (!eat('('))
                        fail("expected '(' after function name");
                    NodePtr arg = parse_expr();
                    if (!eat(')'))
                        fail("expected ')'");
                    auto n = make(Op::call, arg);
                    n->fn = f;
                    return n;
                }
            if (name == var)
                return make(Op::variable);
            pos = start;
            fail("unknown identifier '" + name + "'");
        }
    };

    NodePtr root_;
    std::string source_;
    std::string var_;
};

} // namespace rank1sep
