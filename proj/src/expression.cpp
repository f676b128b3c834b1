#include "trackgrid/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "trackgrid/errors.hpp"

namespace trackgrid {

namespace {

enum class Op { Const, VarX, VarY, Add, Sub, Mul, Div, Pow, Neg, Fun };

using Fun1 = double (*)(double);

}  // namespace

struct Expression::Node {
    Op op = Op::Const;
    double value = 0.0;
    Fun1 fun = nullptr;
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw DatasetParseError("expression: " + what + " at position " + std::to_string(pos + 1),
                                pos + 1);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr, double value = 0.0,
                 Fun1 fun = nullptr) {
        auto n = std::make_shared<Expression::Node>();
        n->op = op;
        n->a = std::move(a);
        n->b = std::move(b);
        n->value = value;
        n->fun = fun;
        return n;
    }

    NodePtr parse_expression() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (eat('+'))
                lhs = make(Op::Add, lhs, parse_term());
            else if (eat('-'))
                lhs = make(Op::Sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (eat('*'))
                lhs = make(Op::Mul, lhs, parse_unary());
            else if (eat('/'))
                lhs = make(Op::Div, lhs, parse_unary());
            else
                return lhs;
        }
    }

    NodePtr parse_unary() {
        if (eat('-')) return make(Op::Neg, parse_unary());
        if (eat('+')) return parse_unary();
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (eat('^')) return make(Op::Pow, base, parse_unary());
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        const char c = text[pos];
        if (c == '(') {
            ++pos;
            NodePtr inner = parse_expression();
            if (!eat(')')) fail("missing closing parenthesis");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    NodePtr parse_number() {
        const char* begin = text.data() + pos;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("malformed number");
        pos += static_cast<std::size_t>(end - begin);
        return make(Op::Const, nullptr, nullptr, v);
    }

    NodePtr parse_name() {
        const std::size_t start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::string name(text.substr(start, pos - start));
        if (name == "x") return make(Op::VarX);
        if (name == "y") return make(Op::VarY);
        if (name == "pi") return make(Op::Const, nullptr, nullptr, std::numbers::pi);
        if (name == "e") return make(Op::Const, nullptr, nullptr, std::numbers::e);

        static const std::pair<const char*, Fun1> functions[] = {
            {"sin", [](double v) { return std::sin(v); }},
            {"cos", [](double v) { return std::cos(v); }},
            {"tan", [](double v) { return std::tan(v); }},
            {"sqrt", [](double v) { return std::sqrt(v); }},
            {"abs", [](double v) { return std::abs(v); }},
            {"exp", [](double v) { return std::exp(v); }},
            {"log", [](double v) { return std::log(v); }},
        };
        for (const auto& [fname, fn] : functions) {
            if (name == fname) {
                if (!eat('(')) fail("expected '(' after function name");
                NodePtr arg = parse_expression();
                if (!eat(')')) fail("missing closing parenthesis");
                return make(Op::Fun, arg, nullptr, 0.0, fn);
            }
        }
        fail("unknown name '" + name + "'");
    }
};

double eval_node(const Expression::Node& n, double x, double y) {
    switch (n.op) {
        case Op::Const: return n.value;
        case Op::VarX: return x;
        case Op::VarY: return y;
        case Op::Add: return eval_node(*n.a, x, y) + eval_node(*n.b, x, y);
        case Op::Sub: return eval_node(*n.a, x, y) - eval_node(*n.b, x, y);
        case Op::Mul: return eval_node(*n.a, x, y) * eval_node(*n.b, x, y);
        case Op::Div: return eval_node(*n.a, x, y) / eval_node(*n.b, x, y);
        case Op::Pow: return std::pow(eval_node(*n.a, x, y), eval_node(*n.b, x, y));
        case Op::Neg: return -eval_node(*n.a, x, y);
        case Op::Fun: return n.fun(eval_node(*n.a, x, y));
    }
    return 0.0;
}

}  // namespace

Expression Expression::parse(std::string_view text) {
    Parser parser{text};
    NodePtr root = parser.parse_expression();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");
    Expression e;
    e.text_ = std::string(text);
    e.root_ = std::move(root);
    return e;
}

double Expression::eval(double x, double y) const { return eval_node(*root_, x, y); }

}  // namespace trackgrid
