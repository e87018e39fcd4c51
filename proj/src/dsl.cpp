#include "liouville/dsl.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace liouville::dsl {

enum class Kind { Number, Constant, Variable, Unary, Binary, Call };

enum class Fn { Sqrt, Abs, Sin, Cos, Tan, Arccos, Cotan, Ln };

struct Expression::Node {
    Kind kind;
    double number = 0;        // Number
    std::string name;         // Constant/Variable name, or function name text
    char op = 0;              // Binary: + - * / ^
    Fn fn = Fn::Sqrt;         // Call
    NodePtr a, b;             // operands (Unary/Call use a only)
};

namespace {

using Node = Expression::Node;
using NodePtr = Expression::NodePtr;

NodePtr num(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Number;
    n->number = v;
    return n;
}

NodePtr var(const std::string& name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Variable;
    n->name = name;
    return n;
}

NodePtr constant(const std::string& name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->name = name;
    return n;
}

NodePtr unary(NodePtr a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Unary;
    n->a = std::move(a);
    return n;
}

NodePtr binary(char op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Binary;
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr call(Fn fn, const std::string& name, NodePtr a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Call;
    n->fn = fn;
    n->name = name;
    n->a = std::move(a);
    return n;
}

const std::map<std::string, Fn>& function_table() {
    static const std::map<std::string, Fn> table = {
        {"sqrt", Fn::Sqrt}, {"abs", Fn::Abs},       {"sin", Fn::Sin},
        {"cos", Fn::Cos},   {"tan", Fn::Tan},       {"arccos", Fn::Arccos},
        {"cotan", Fn::Cotan}, {"ln", Fn::Ln},
    };
    return table;
}

bool is_constant_name(const std::string& s) {
    return s == "R" || s == "sigma" || s == "sigma_bar" || s == "a" || s == "m" ||
           s == "pi";
}

// ---------------------------------------------------------------- parser

struct Parser {
    const std::string& in;
    std::size_t pos = 0;
    std::string varname;  // first non-constant identifier seen

    explicit Parser(const std::string& s) : in(s) {}

    [[noreturn]] void fail(std::size_t at, const std::string& expected) const {
        const std::size_t end = std::min(in.size(), at + 12);
        throw ParseError(at, expected, in.substr(at, end - at));
    }

    void skip_ws() {
        while (pos < in.size() && std::isspace(static_cast<unsigned char>(in[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < in.size() && in[pos] == c) { ++pos; return true; }
        return false;
    }

    std::optional<char> peek() {
        skip_ws();
        if (pos >= in.size()) return std::nullopt;
        return in[pos];
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        while (auto c = peek()) {
            if (*c != '+' && *c != '-') break;
            ++pos;
            lhs = binary(*c, lhs, parse_term());
        }
        return lhs;
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        while (auto c = peek()) {
            if (*c != '*' && *c != '/') break;
            ++pos;
            lhs = binary(*c, lhs, parse_unary());
        }
        return lhs;
    }

    NodePtr parse_unary() {
        if (eat('-')) return unary(parse_unary());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (eat('^')) {
            // right-associative; exponent may carry its own unary minus
            return binary('^', base, parse_unary());
        }
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos >= in.size()) fail(pos, "operand");
        const char c = in[pos];
        if (c == '(') {
            ++pos;
            NodePtr e = parse_expr();
            if (!eat(')')) fail(pos, "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        fail(pos, "operand");
    }

    NodePtr parse_number() {
        const char* start = in.c_str() + pos;
        char* end = nullptr;
        const double v = std::strtod(start, &end);
        if (end == start) fail(pos, "number");
        pos += static_cast<std::size_t>(end - start);
        return num(v);
    }

    NodePtr parse_ident() {
        const std::size_t start = pos;
        while (pos < in.size() &&
               (std::isalnum(static_cast<unsigned char>(in[pos])) || in[pos] == '_'))
            ++pos;
        const std::string name = in.substr(start, pos - start);
        auto fn = function_table().find(name);
        if (fn != function_table().end()) {
            if (!eat('(')) fail(pos, "'(' after function name");
            NodePtr arg = parse_expr();
            if (!eat(')')) fail(pos, "')'");
            return call(fn->second, name, arg);
        }
        if (is_constant_name(name)) return constant(name);
        if (varname.empty()) varname = name;
        else if (name != varname) fail(start, "single free variable (saw '" + varname + "' earlier)");
        return var(name);
    }
};

// ---------------------------------------------------------------- evaluate

double resolve_constant(const std::string& name, const geom::ManifoldConfig& cfg) {
    if (name == "R") return cfg.R;
    if (name == "sigma") return cfg.sigma;
    if (name == "sigma_bar") return cfg.sigma_bar;
    if (name == "a") return cfg.a;
    if (name == "m") return cfg.m;
    if (name == "pi") return M_PI;
    throw EvaluationError("unknown constant '" + name + "'");
}

std::string print_node(const Node& n);

double eval_node(const Node& n, double x, const geom::ManifoldConfig& cfg) {
    switch (n.kind) {
        case Kind::Number: return n.number;
        case Kind::Constant: return resolve_constant(n.name, cfg);
        case Kind::Variable: return x;
        case Kind::Unary: return -eval_node(*n.a, x, cfg);
        case Kind::Binary: {
            const double a = eval_node(*n.a, x, cfg);
            const double b = eval_node(*n.b, x, cfg);
            switch (n.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/':
                    if (b == 0.0)
                        throw EvaluationError("division by zero in " + print_node(n));
                    return a / b;
                case '^': {
                    const double r = std::pow(a, b);
                    if (!std::isfinite(r))
                        throw EvaluationError("non-finite power in " + print_node(n));
                    return r;
                }
            }
            throw EvaluationError("bad operator");
        }
        case Kind::Call: {
            const double a = eval_node(*n.a, x, cfg);
            switch (n.fn) {
                case Fn::Sqrt:
                    if (a < 0) throw EvaluationError("sqrt of negative in " + print_node(n));
                    return std::sqrt(a);
                case Fn::Abs: return std::fabs(a);
                case Fn::Sin: return std::sin(a);
                case Fn::Cos: return std::cos(a);
                case Fn::Tan: return std::tan(a);
                case Fn::Arccos:
                    if (a < -1 || a > 1)
                        throw EvaluationError("arccos out of [-1,1] in " + print_node(n));
                    return std::acos(a);
                case Fn::Cotan: {
                    const double t = std::tan(a);
                    if (t == 0.0)
                        throw EvaluationError("cotan pole in " + print_node(n));
                    return 1.0 / t;
                }
                case Fn::Ln:
                    if (a <= 0) throw EvaluationError("ln of non-positive in " + print_node(n));
                    return std::log(a);
            }
            throw EvaluationError("bad function");
        }
    }
    throw EvaluationError("bad node");
}

// ---------------------------------------------------------------- print

std::string fmt_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string print_node(const Node& n) {
    switch (n.kind) {
        case Kind::Number:
            return n.number < 0 ? "(" + fmt_number(n.number) + ")" : fmt_number(n.number);
        case Kind::Constant:
        case Kind::Variable: return n.name;
        case Kind::Unary: return "(-" + print_node(*n.a) + ")";
        case Kind::Binary:
            return "(" + print_node(*n.a) + n.op + print_node(*n.b) + ")";
        case Kind::Call: return n.name + "(" + print_node(*n.a) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------- derivative

bool depends_on_var(const Node& n) {
    switch (n.kind) {
        case Kind::Variable: return true;
        case Kind::Number:
        case Kind::Constant: return false;
        case Kind::Unary: return depends_on_var(*n.a);
        case Kind::Binary: return depends_on_var(*n.a) || depends_on_var(*n.b);
        case Kind::Call: return depends_on_var(*n.a);
    }
    return false;
}

NodePtr diff_node(const NodePtr& n);

NodePtr diff_power(const Node& n) {
    // d(f^g): constant exponent gets the plain power rule, otherwise the
    // logarithmic form f^g (g' ln f + g f'/f).
    const NodePtr& f = n.a;
    const NodePtr& g = n.b;
    if (!depends_on_var(*g)) {
        // g * f^(g-1) * f'
        return binary('*', binary('*', g, binary('^', f, binary('-', g, num(1)))),
                      diff_node(f));
    }
    NodePtr fg = binary('^', f, g);
    NodePtr term1 = binary('*', diff_node(g), call(Fn::Ln, "ln", f));
    NodePtr term2 = binary('/', binary('*', g, diff_node(f)), f);
    return binary('*', fg, binary('+', term1, term2));
}

NodePtr diff_call(const Node& n) {
    const NodePtr& a = n.a;
    NodePtr da = diff_node(a);
    NodePtr inner;
    switch (n.fn) {
        case Fn::Sqrt:  // 1/(2 sqrt(a))
            inner = binary('/', num(1), binary('*', num(2), call(Fn::Sqrt, "sqrt", a)));
            break;
        case Fn::Abs:  // a/abs(a)
            inner = binary('/', a, call(Fn::Abs, "abs", a));
            break;
        case Fn::Sin:
            inner = call(Fn::Cos, "cos", a);
            break;
        case Fn::Cos:
            inner = unary(call(Fn::Sin, "sin", a));
            break;
        case Fn::Tan:  // 1 + tan^2
            inner = binary('+', num(1), binary('^', call(Fn::Tan, "tan", a), num(2)));
            break;
        case Fn::Arccos:  // -1/sqrt(1-a^2)
            inner = unary(binary('/', num(1),
                                 call(Fn::Sqrt, "sqrt",
                                      binary('-', num(1), binary('^', a, num(2))))));
            break;
        case Fn::Cotan:  // -(1 + cotan^2)
            inner = unary(binary('+', num(1),
                                 binary('^', call(Fn::Cotan, "cotan", a), num(2))));
            break;
        case Fn::Ln:
            inner = binary('/', num(1), a);
            break;
    }
    return binary('*', inner, da);
}

NodePtr diff_node(const NodePtr& n) {
    switch (n->kind) {
        case Kind::Number:
        case Kind::Constant: return num(0);
        case Kind::Variable: return num(1);
        case Kind::Unary: return unary(diff_node(n->a));
        case Kind::Binary:
            switch (n->op) {
                case '+': return binary('+', diff_node(n->a), diff_node(n->b));
                case '-': return binary('-', diff_node(n->a), diff_node(n->b));
                case '*':
                    return binary('+', binary('*', diff_node(n->a), n->b),
                                  binary('*', n->a, diff_node(n->b)));
                case '/':
                    // (a'b - ab')/b^2
                    return binary('/',
                                  binary('-', binary('*', diff_node(n->a), n->b),
                                         binary('*', n->a, diff_node(n->b))),
                                  binary('^', n->b, num(2)));
                case '^': return diff_power(*n);
            }
            break;
        case Kind::Call: return diff_call(*n);
    }
    throw EvaluationError("differentiate: bad node");
}

NodePtr substitute_node(const NodePtr& n, const NodePtr& repl) {
    switch (n->kind) {
        case Kind::Number:
        case Kind::Constant: return n;
        case Kind::Variable: return repl;
        case Kind::Unary: return unary(substitute_node(n->a, repl));
        case Kind::Binary:
            return binary(n->op, substitute_node(n->a, repl), substitute_node(n->b, repl));
        case Kind::Call: return call(n->fn, n->name, substitute_node(n->a, repl));
    }
    throw EvaluationError("substitute: bad node");
}

}  // namespace

double Expression::evaluate(double value, const geom::ManifoldConfig& cfg) const {
    if (!root_) throw EvaluationError("empty expression");
    return eval_node(*root_, value, cfg);
}

Expression Expression::differentiate() const {
    if (!root_) throw EvaluationError("empty expression");
    return Expression(diff_node(root_), var_);
}

Expression Expression::substitute(const Expression& replacement) const {
    if (!root_ || !replacement.root_) throw EvaluationError("empty expression");
    return Expression(substitute_node(root_, replacement.root_), replacement.var_);
}

std::string Expression::print() const {
    if (!root_) return "";
    return print_node(*root_);
}

Expression parse(const std::string& input) {
    Parser p(input);
    NodePtr root = p.parse_expr();
    p.skip_ws();
    if (p.pos != input.size()) p.fail(p.pos, "end of input");
    return Expression(root, p.varname);
}

Expression make_variable(const std::string& name) {
    return Expression(var(name), name);
}

Expression make_literal(double value) {
    return Expression(num(value), "");
}

Expression combine(char op, const Expression& a, const Expression& b) {
    std::string v = a.variable().empty() ? b.variable() : a.variable();
    return Expression(binary(op, a.root(), b.root()), v);
}

}  // namespace liouville::dsl
