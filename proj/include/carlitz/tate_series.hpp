#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "carlitz/local_element.hpp"
#include "carlitz/tail_bound.hpp"

namespace carlitz {

/// Series sum c_j t^j with LocalElement coefficients, stored for
/// j = 0..t_deg. If `exact_t` is set the series is a polynomial and every
/// coefficient past t_deg is exactly zero; otherwise coefficients past
/// t_deg are unknown apart from the optional tail certificate.
class TateSeries {
 public:
  TateSeries() = default;
  TateSeries(FieldPtr f, std::vector<LocalElement> coeffs, bool exact_t, TailPtr tail = nullptr);

  static TateSeries zero(const FieldPtr& f) { return TateSeries(f, {}, true); }
  static TateSeries constant(const LocalElement& c) { return TateSeries(c.field(), {c}, true); }
  static TateSeries polynomial(const FieldPtr& f, std::vector<LocalElement> coeffs) {
    return TateSeries(f, std::move(coeffs), true);
  }
  /// The polynomial t - c.
  static TateSeries t_minus(const LocalElement& c);

  const FieldPtr& field() const { return field_; }
  std::int64_t t_deg() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool exact_t() const { return exact_t_; }
  const std::vector<LocalElement>& coeffs() const { return coeffs_; }
  /// Coefficient j; exact zero past the degree of a polynomial.
  LocalElement coeff(std::int64_t j) const;
  /// The explicit certificate, or the implied one of a polynomial.
  TailPtr tail() const;
  bool has_tail() const { return exact_t_ || tail_ != nullptr; }
  /// Minimum precision over stored coefficients.
  std::int64_t min_prec() const;

  TateSeries operator-() const;
  friend TateSeries operator+(const TateSeries& a, const TateSeries& b);
  friend TateSeries operator-(const TateSeries& a, const TateSeries& b);
  friend TateSeries operator*(const TateSeries& a, const TateSeries& b);
  TateSeries scale(const LocalElement& c) const;

  /// Coefficientwise twist; t-degrees unchanged. `cap` bounds the absolute
  /// precision of each coefficient.
  TateSeries twist(std::int64_t n, std::optional<std::int64_t> cap = std::nullopt) const;

  /// Inverse of a series dominated by its constant term. A polynomial
  /// input needs an explicit truncation order.
  TateSeries invert_unit(std::optional<std::int64_t> t_deg = std::nullopt) const;
  /// Quotient by (t - c) for |c| > 1, i.e. multiplication by the expansion
  /// -c^-1 sum (t/c)^n.
  TateSeries div_t_minus(const LocalElement& c, std::optional<std::int64_t> t_deg = std::nullopt) const;

  TateSeries truncate_t(std::int64_t t_deg) const;
  TateSeries truncate_prec(std::int64_t prec) const;
  TateSeries with_tail(TailPtr t) const;

  /// Valuation form of the Gauss norm: min valuation over stored
  /// coefficients (|f| = q^(-v/ram)).
  NormInfo gauss_norm() const;
  /// True when every stored coefficient is zero at its precision.
  bool is_zero_at_precision() const;

  /// Evaluation for |a| <= 1 over the stored coefficients.
  LocalElement eval(const LocalElement& a) const;
  /// Certified evaluation at any a using the tail certificate. Throws
  /// InsufficientTruncation if no certificate applies or the certified
  /// precision is below `required_prec`.
  LocalElement eval_entire(const LocalElement& a, std::optional<std::int64_t> required_prec = std::nullopt) const;

 private:
  FieldPtr field_;
  std::vector<LocalElement> coeffs_;
  bool exact_t_ = true;
  TailPtr tail_;
};

}  // namespace carlitz
