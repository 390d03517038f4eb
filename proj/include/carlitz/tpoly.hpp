#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "carlitz/local_element.hpp"
#include "carlitz/tate_series.hpp"

namespace carlitz {

/// Polynomial in t with exact coefficients in F_{q^e}((pi)).
class TPoly {
 public:
  TPoly() = default;
  /// Throws std::invalid_argument if a coefficient is inexact.
  TPoly(FieldPtr f, std::vector<LocalElement> coeffs);

  static TPoly zero(const FieldPtr& f) { return TPoly(f, {}); }
  static TPoly constant(const LocalElement& c) { return TPoly(c.field(), {c}); }
  static TPoly from_int(const FieldPtr& f, std::int64_t n) { return constant(LocalElement::from_int(f, n)); }
  static TPoly t(const FieldPtr& f);
  /// t - c
  static TPoly t_minus(const LocalElement& c);

  const FieldPtr& field() const { return field_; }
  const std::vector<LocalElement>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  LocalElement coeff(std::size_t i) const;

  friend TPoly operator+(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a, const TPoly& b);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly operator-() const;
  TPoly scale(const LocalElement& s) const;
  TPoly pow(unsigned k) const;
  /// Coefficientwise twist; negative n throws NotAQthPower when a
  /// coefficient has no q^|n|-th root in the working field.
  TPoly twist(std::int64_t n) const;
  /// Exact quotient by (t - c), or nullopt when the remainder is nonzero.
  std::optional<TPoly> divide_linear(const LocalElement& c) const;
  LocalElement eval(const LocalElement& x) const;
  TateSeries to_series() const { return TateSeries::polynomial(field_, c_); }
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
  std::string to_string() const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<LocalElement> c_;
};

class TPolyMatrix {
 public:
  TPolyMatrix() = default;
  TPolyMatrix(FieldPtr f, std::size_t rows, std::size_t cols);
  static TPolyMatrix identity(const FieldPtr& f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }
  TPoly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const TPoly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  friend TPolyMatrix operator*(const TPolyMatrix& a, const TPolyMatrix& b);
  friend TPolyMatrix operator-(const TPolyMatrix& a, const TPolyMatrix& b);
  TPolyMatrix scale(const TPoly& s) const;
  TPolyMatrix transpose() const;
  TPolyMatrix twist(std::int64_t n) const;
  TPolyMatrix kron(const TPolyMatrix& b) const;
  TPoly det() const;
  /// Classical adjugate: A adj(A) = det(A) I.
  TPolyMatrix adjugate() const;
  bool is_zero() const;
  friend bool operator==(const TPolyMatrix& a, const TPolyMatrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<TPoly> e_;
};

/// num / den with a common denominator; polynomial matrices have den = 1.
struct RationalMatrix {
  TPolyMatrix num;
  TPoly den;

  static RationalMatrix from_poly(TPolyMatrix m);
  RationalMatrix twist(std::int64_t n) const { return {num.twist(n), den.twist(n)}; }
  RationalMatrix kron(const RationalMatrix& b) const { return {num.kron(b.num), den * b.den}; }
  /// (M^-1)^tr. Throws NonInvertible when det is zero.
  RationalMatrix inverse_transpose() const;
  /// Equality as matrices over k(t), by cross-multiplication.
  bool equivalent(const RationalMatrix& b) const;
};

}  // namespace carlitz
