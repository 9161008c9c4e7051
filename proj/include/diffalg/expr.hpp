#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "diffalg/ratfunc.hpp"

namespace diffalg {

// Parse tree for the expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-')? atom ('^' nonneg-int)?
//   atom   := integer | identifier | '(' expr ')'
// In differential-form expressions the extra atom  d '(' expr ')'  is allowed.
struct ExprAst {
    enum class Kind { Int, Var, Neg, Add, Sub, Mul, Div, Pow, Diff };

    Kind kind;
    Int int_value{0};            // Int
    std::string name;            // Var
    std::uint32_t exponent = 0;  // Pow
    std::vector<std::unique_ptr<ExprAst>> children;
    std::size_t line = 0, col = 0;
};

using ExprPtr = std::unique_ptr<ExprAst>;

// Parses the full text as one expression; throws ParseError on bad syntax.
ExprPtr parse_expr_ast(std::string_view text, bool allow_diff = false);

// Lowers an AST (without Diff nodes) to a canonical rational function over the
// declared variables.  Unknown identifiers and division by the zero function
// are reported as errors.
RatFunc eval_expr_ast(const ExprAst& ast, const std::vector<std::string>& vars);

// parse + eval in one step.
RatFunc parse_expr(std::string_view text, const std::vector<std::string>& vars);

}  // namespace diffalg
