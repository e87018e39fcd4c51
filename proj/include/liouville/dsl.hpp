#pragma once

#include <memory>
#include <string>

#include "liouville/errors.hpp"
#include "liouville/manifold.hpp"

namespace liouville::dsl {

/// One-variable expression over numeric literals, the named constants of a
/// ManifoldConfig (R, sigma, sigma_bar, a, m) plus pi, the binary operators
/// + - * / ^, unary minus, and the functions
/// sqrt, abs, sin, cos, tan, arccos, cotan, ln.
///
/// Trees are immutable and freely shareable across threads.
class Expression {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    Expression() = default;
    explicit Expression(NodePtr root, std::string var)
        : root_(std::move(root)), var_(std::move(var)) {}

    bool empty() const { return !root_; }

    /// Name of the single free variable ("U", "v", ...); empty when the
    /// expression is constant.
    const std::string& variable() const { return var_; }

    /// Evaluate at var = value, resolving constants against cfg.
    /// Throws EvaluationError on domain violations (sqrt of a negative,
    /// division by zero, ...), naming the offending subexpression.
    double evaluate(double value, const geom::ManifoldConfig& cfg) const;

    /// Exact symbolic derivative with respect to the free variable.
    Expression differentiate() const;

    /// Substitute `replacement` for the free variable; the result's free
    /// variable is the replacement's.
    Expression substitute(const Expression& replacement) const;

    /// Parenthesized text form; parse(print(e)) evaluates identically to e.
    std::string print() const;

    const NodePtr& root() const { return root_; }

private:
    NodePtr root_;
    std::string var_;
};

/// Parse an expression.  Precedence: ^ (right-associative) binds tightest,
/// then unary minus, then * /, then + -.  No implicit multiplication.
/// Throws ParseError with the byte offset of the failure.
Expression parse(const std::string& input);

/// Convenience: make a bare variable or a numeric literal.
Expression make_variable(const std::string& name);
Expression make_literal(double value);

/// a op b for op in {+,-,*,/,^}; operands may use the same variable.
Expression combine(char op, const Expression& a, const Expression& b);

}  // namespace liouville::dsl
