#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscalg/ratfun.hpp"

namespace oscalg {

// Thrown when an expression is evaluated where it is not defined
// (division by zero at the point). Callers that adopt a null-value
// convention catch this specifically.
struct ExprUndefined : std::domain_error {
    using std::domain_error::domain_error;
};

// Small arithmetic expression AST over rational constants and named
// variables, with + - * / ^ and implicit multiplication (e.g. "2n",
// "3(n+1)"). Exponents must be integer literals.
struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Const, Var, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    Rat value;          // Const
    std::string name;   // Var
    Expr lhs, rhs;      // binary ops; Neg uses lhs only
    long exponent = 0;  // Pow
};

// Parses an expression; throws std::invalid_argument with position info.
Expr parse_expr(const std::string& text);

// Exact pointwise evaluation. Unknown variables raise invalid_argument;
// division by zero raises ExprUndefined.
Rat eval_expr(const Expr& e, const std::map<std::string, Rat>& env);

// Symbolic interpretation as a rational function of a single variable.
// Any other identifier raises invalid_argument.
RatFun expr_to_ratfun(const Expr& e, const std::string& var);

// Convenience: parse and convert in one step.
RatFun parse_ratfun(const std::string& text, const std::string& var = "n");

}  // namespace oscalg
