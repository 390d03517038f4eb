#include "carlitz/parser.hpp"

#include <cctype>
#include <limits>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

ExprPtr node(Expr::Kind k, std::size_t pos, ExprPtr l = nullptr, ExprPtr r = nullptr, std::int64_t v = 0) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->pos = pos;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  e->value = v;
  return e;
}

class Parser {
 public:
  Parser(const std::string& s, ParseContext ctx) : s_(s), ctx_(ctx) {}

  ExprPtr run() {
    auto e = expr();
    skip();
    if (i_ != s_.size()) throw SyntaxError(std::string("unexpected '") + s_[i_] + "'", i_);
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = i_;
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      throw SyntaxError("expected an integer", i_);
    std::int64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      const int d = s_[i_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) throw SyntaxError("integer too large", start);
      v = v * 10 + d;
      ++i_;
    }
    return v;
  }

  ExprPtr expr() {
    auto l = term();
    for (;;) {
      skip();
      const std::size_t p = i_;
      if (eat('+'))
        l = node(Expr::Kind::Add, p, l, term());
      else if (eat('-'))
        l = node(Expr::Kind::Sub, p, l, term());
      else
        return l;
    }
  }

  ExprPtr term() {
    auto l = factor();
    for (;;) {
      skip();
      const std::size_t p = i_;
      if (eat('*'))
        l = node(Expr::Kind::Mul, p, l, factor());
      else if (eat('/'))
        l = node(Expr::Kind::Div, p, l, factor());
      else
        return l;
    }
  }

  ExprPtr factor() {
    auto a = atom();
    skip();
    const std::size_t p = i_;
    if (!eat('^')) return a;
    skip();
    const std::size_t ep = i_;
    const bool neg = eat('-');
    std::int64_t k = integer();
    if (neg) {
      if (a->kind != Expr::Kind::Theta && a->kind != Expr::Kind::Zeta && a->kind != Expr::Kind::Pi)
        throw SyntaxError("negative exponent only allowed on th, z, pi", ep);
      k = -k;
    }
    return node(Expr::Kind::Pow, p, a, nullptr, k);
  }

  ExprPtr atom() {
    skip();
    const std::size_t p = i_;
    if (i_ >= s_.size()) throw SyntaxError("unexpected end of input", i_);
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) return node(Expr::Kind::Int, p, nullptr, nullptr, integer());
    if (c == '(') {
      ++i_;
      auto e = expr();
      if (!eat(')')) throw SyntaxError("expected ')'", i_);
      return node(Expr::Kind::Paren, p, e);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
      const std::string w = s_.substr(i_, j - i_);
      Expr::Kind k;
      if (w == "th")
        k = Expr::Kind::Theta;
      else if (w == "z")
        k = Expr::Kind::Zeta;
      else if (w == "pi")
        k = Expr::Kind::Pi;
      else if (w == "t")
        k = Expr::Kind::T;
      else
        throw SyntaxError("unknown identifier '" + w + "'", p);
      if (k == Expr::Kind::T && ctx_ != ParseContext::TPoly)
        throw ContextError("'t' is only allowed in polynomial input (position " + std::to_string(p) + ")");
      i_ = j;
      return node(k, p);
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", p);
  }

  const std::string& s_;
  ParseContext ctx_;
  std::size_t i_ = 0;
};

}  // namespace

ExprPtr parse_element(const std::string& text, ParseContext ctx) { return Parser(text, ctx).run(); }

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Int: return std::to_string(e.value);
    case Expr::Kind::Theta: return "th";
    case Expr::Kind::Zeta: return "z";
    case Expr::Kind::Pi: return "pi";
    case Expr::Kind::T: return "t";
    case Expr::Kind::Add: return print_expr(*e.lhs) + " + " + print_expr(*e.rhs);
    case Expr::Kind::Sub: return print_expr(*e.lhs) + " - " + print_expr(*e.rhs);
    case Expr::Kind::Mul: return print_expr(*e.lhs) + "*" + print_expr(*e.rhs);
    case Expr::Kind::Div: return print_expr(*e.lhs) + "/" + print_expr(*e.rhs);
    case Expr::Kind::Pow: return print_expr(*e.lhs) + "^" + std::to_string(e.value);
    case Expr::Kind::Paren: return "(" + print_expr(*e.lhs) + ")";
  }
  return "";
}

LocalElement eval_field(const Expr& e, const FieldPtr& f) {
  switch (e.kind) {
    case Expr::Kind::Int: return LocalElement::from_int(f, e.value);
    case Expr::Kind::Theta: return LocalElement::theta(f);
    case Expr::Kind::Zeta: return LocalElement::zeta(f);
    case Expr::Kind::Pi: return LocalElement::pi(f);
    case Expr::Kind::T: throw ContextError("'t' is only allowed in polynomial input");
    case Expr::Kind::Add: return eval_field(*e.lhs, f) + eval_field(*e.rhs, f);
    case Expr::Kind::Sub: return eval_field(*e.lhs, f) - eval_field(*e.rhs, f);
    case Expr::Kind::Mul: return eval_field(*e.lhs, f) * eval_field(*e.rhs, f);
    case Expr::Kind::Div: {
      // Exact monomial divisors keep the quotient exact.
      const LocalElement d = eval_field(*e.rhs, f);
      if (d.is_exact() && d.is_monomial()) return eval_field(*e.lhs, f).div(d);
      return eval_field(*e.lhs, f).div(d, f->default_prec());
    }
    case Expr::Kind::Pow: return eval_field(*e.lhs, f).pow(e.value);
    case Expr::Kind::Paren: return eval_field(*e.lhs, f);
  }
  return LocalElement::zero(f);
}

TPoly eval_tpoly(const Expr& e, const FieldPtr& f) {
  switch (e.kind) {
    case Expr::Kind::T: return TPoly::t(f);
    case Expr::Kind::Int:
    case Expr::Kind::Theta:
    case Expr::Kind::Zeta:
    case Expr::Kind::Pi: return TPoly::constant(eval_field(e, f));
    case Expr::Kind::Add: return eval_tpoly(*e.lhs, f) + eval_tpoly(*e.rhs, f);
    case Expr::Kind::Sub: return eval_tpoly(*e.lhs, f) - eval_tpoly(*e.rhs, f);
    case Expr::Kind::Mul: return eval_tpoly(*e.lhs, f) * eval_tpoly(*e.rhs, f);
    case Expr::Kind::Div: {
      const TPoly d = eval_tpoly(*e.rhs, f);
      if (d.degree() != 0) throw ContextError("polynomial input may only be divided by a nonzero constant");
      const LocalElement inv = d.coeff(0).inv(f->default_prec());
      if (!inv.is_exact()) throw ContextError("polynomial input: divisor " + d.to_string() + " has no exact inverse");
      return eval_tpoly(*e.lhs, f).scale(inv);
    }
    case Expr::Kind::Pow: {
      if (e.value < 0) return TPoly::constant(eval_field(e, f));
      return eval_tpoly(*e.lhs, f).pow(static_cast<unsigned>(e.value));
    }
    case Expr::Kind::Paren: return eval_tpoly(*e.lhs, f);
  }
  return TPoly::zero(f);
}

LocalElement parse_field_value(const std::string& text, const FieldPtr& f) {
  return eval_field(*parse_element(text, ParseContext::Field), f);
}

TPoly parse_tpoly_value(const std::string& text, const FieldPtr& f) {
  return eval_tpoly(*parse_element(text, ParseContext::TPoly), f);
}

FqPoly parse_fq_poly(const std::string& text, const FieldPtr& f) {
  const TPoly p = parse_tpoly_value(text, f);
  std::vector<Residue> c;
  for (const auto& x : p.coeffs()) {
    const auto terms = x.terms();
    if (terms.empty()) {
      c.push_back(0);
      continue;
    }
    if (terms.size() != 1 || terms.begin()->first != 0 || !f->in_fq(terms.begin()->second))
      throw ContextError("expected a polynomial in t over F_q, got coefficient " + x.to_string());
    c.push_back(terms.begin()->second);
  }
  return FqPoly(f, c);
}

}  // namespace carlitz
