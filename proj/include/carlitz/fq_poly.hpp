#pragma once

#include <string>
#include <vector>

#include "carlitz/local_element.hpp"

namespace carlitz {

/// Polynomial in t over F_q, coefficients stored as residues lying in the
/// copy of F_q inside F_{q^e}. Lowest degree first, no trailing zeros.
class FqPoly {
 public:
  FqPoly() = default;
  FqPoly(FieldPtr f, std::vector<Residue> c);

  static FqPoly constant(const FieldPtr& f, Residue c) { return FqPoly(f, {c}); }
  static FqPoly t(const FieldPtr& f) { return FqPoly(f, {0, 1}); }

  const FieldPtr& field() const { return field_; }
  const std::vector<Residue>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Residue leading() const { return c_.empty() ? 0 : c_.back(); }

  friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  FqPoly operator-() const;
  FqPoly scale(Residue s) const;
  FqPoly pow(unsigned k) const;
  /// Euclidean division; throws on a zero divisor.
  std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const;
  FqPoly monic() const;
  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }

  /// a(theta) as an exact element.
  LocalElement eval_theta() const;
  LocalElement eval(const LocalElement& x) const;
  std::string to_string() const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<Residue> c_;
};

FqPoly gcd(FqPoly a, FqPoly b);

/// Element num/den of F_q(t), kept reduced with a monic denominator.
struct RatFun {
  FqPoly num;
  FqPoly den;

  RatFun() = default;
  RatFun(FqPoly n, FqPoly d);
  static RatFun from_poly(const FqPoly& p) { return RatFun(p, FqPoly::constant(p.field(), 1)); }
  bool is_zero() const { return num.is_zero(); }
  std::string to_string() const;
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num == b.num && a.den == b.den; }
};

/// C_a(x) for a in F_q[t]: C_t(x) = theta x + x^q extended by Horner.
LocalElement carlitz_action(const FqPoly& a, const LocalElement& x);

}  // namespace carlitz
