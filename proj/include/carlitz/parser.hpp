#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "carlitz/fq_poly.hpp"
#include "carlitz/local_element.hpp"
#include "carlitz/tpoly.hpp"

namespace carlitz {

enum class ParseContext { Field, TPoly };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Syntax tree for
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' int)?
///   atom   := int | th | z | pi | t | '(' expr ')'
/// Parentheses are kept as nodes so printing reproduces the input layout.
struct Expr {
  enum class Kind { Int, Theta, Zeta, Pi, T, Add, Sub, Mul, Div, Pow, Paren };
  Kind kind = Kind::Int;
  /// Literal value for Int, exponent for Pow.
  std::int64_t value = 0;
  ExprPtr lhs, rhs;
  std::size_t pos = 0;
};

/// Throws SyntaxError (with a 0-based position) on malformed text and
/// ContextError for `t` outside a polynomial context.
ExprPtr parse_element(const std::string& text, ParseContext ctx);

/// Canonical text: spaces around + and -, none elsewhere.
std::string print_expr(const Expr& e);

/// Field value. Division by a non-monomial expands to default_prec.
LocalElement eval_field(const Expr& e, const FieldPtr& f);
/// Polynomial in t with exact coefficients. Division is allowed only by a
/// constant with an exact inverse.
TPoly eval_tpoly(const Expr& e, const FieldPtr& f);

LocalElement parse_field_value(const std::string& text, const FieldPtr& f);
TPoly parse_tpoly_value(const std::string& text, const FieldPtr& f);
/// For the Carlitz action: every coefficient must be a constant in F_q.
FqPoly parse_fq_poly(const std::string& text, const FieldPtr& f);

}  // namespace carlitz
