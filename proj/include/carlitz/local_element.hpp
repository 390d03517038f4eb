#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "carlitz/field.hpp"
#include "carlitz/rational.hpp"

namespace carlitz {

/// Precision sentinel for elements known exactly (finite pi-support).
inline constexpr std::int64_t kExact = INT64_MAX / 4;

std::int64_t sat_add(std::int64_t a, std::int64_t b);
std::int64_t sat_mul(std::int64_t a, std::int64_t b);
inline bool is_exact_prec(std::int64_t p) { return p >= kExact; }

enum class ZeroState { Nonzero, ZeroAtPrecision, ExactZero };

/// log_q |x| together with the pi-valuation it came from. When the element
/// has no nonzero digit below its precision, `upper_bound` is set and
/// `log_q` bounds the norm from above.
struct NormInfo {
  std::optional<std::int64_t> valuation;
  Rational log_q;
  bool upper_bound = false;
};

/// Truncated pi-Laurent series over F_{q^e}: sum of digits[k] pi^(lo+k),
/// known modulo pi^prec. Digits at exponents >= prec are never stored.
class LocalElement {
 public:
  LocalElement() = default;
  explicit LocalElement(FieldPtr f, std::int64_t prec = kExact) : field_(std::move(f)), prec_(prec) {}

  static LocalElement zero(const FieldPtr& f, std::int64_t prec = kExact) { return LocalElement(f, prec); }
  static LocalElement from_int(const FieldPtr& f, std::int64_t n);
  static LocalElement constant(const FieldPtr& f, Residue c);
  static LocalElement monomial(const FieldPtr& f, Residue c, std::int64_t exponent, std::int64_t prec = kExact);
  static LocalElement from_terms(const FieldPtr& f, const std::map<std::int64_t, Residue>& terms,
                                 std::int64_t prec = kExact);
  static LocalElement pi(const FieldPtr& f) { return monomial(f, 1, 1); }
  /// theta = -pi^(-ram)
  static LocalElement theta(const FieldPtr& f);
  /// zeta_theta = pi^(-ram/(q-1)); zeta^(q-1) = -theta.
  static LocalElement zeta(const FieldPtr& f);

  const FieldPtr& field() const { return field_; }
  std::int64_t prec() const { return prec_; }
  bool is_exact() const { return is_exact_prec(prec_); }
  std::int64_t lo() const { return lo_; }
  const std::vector<Residue>& digits() const { return digits_; }
  /// Exponent one past the last stored digit (== lo when empty).
  std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(digits_.size()); }
  Residue coeff(std::int64_t exponent) const;
  std::map<std::int64_t, Residue> terms() const;

  std::optional<std::int64_t> valuation() const;
  /// Valuation when known, otherwise the precision (the best lower bound).
  std::int64_t valuation_lower_bound() const;
  Residue leading() const;
  ZeroState zero_state() const;
  bool is_zero() const { return digits_.empty(); }
  NormInfo norm() const;
  bool is_monomial() const;

  LocalElement truncate(std::int64_t prec) const;
  /// Same digits, precision forgotten down to `prec` only if lower.
  LocalElement with_prec(std::int64_t prec) const { return truncate(prec); }

  LocalElement operator-() const;
  LocalElement& operator+=(const LocalElement& b);
  LocalElement& operator-=(const LocalElement& b);
  LocalElement& operator*=(const LocalElement& b) { return *this = *this * b; }
  friend LocalElement operator+(LocalElement a, const LocalElement& b) { return a += b; }
  friend LocalElement operator-(LocalElement a, const LocalElement& b) { return a -= b; }
  friend LocalElement operator*(const LocalElement& a, const LocalElement& b);

  /// Multiplicative inverse. Exact monomials stay exact; other exact
  /// elements are expanded to absolute precision `target` (default_prec
  /// when absent). Throws DivisionByIndistinguishableZero.
  LocalElement inv(std::optional<std::int64_t> target = std::nullopt) const;
  LocalElement div(const LocalElement& b, std::optional<std::int64_t> target = std::nullopt) const;
  LocalElement pow(std::int64_t k, std::optional<std::int64_t> target = std::nullopt) const;
  LocalElement scale(Residue c) const;
  /// Multiplication by pi^k (exact).
  LocalElement shift(std::int64_t k) const;

  /// x^(q^n) for n >= 0, the q^|n|-th root for n < 0. `cap` drops digits at
  /// exponents >= cap and lowers the precision to it.
  LocalElement twist(std::int64_t n, std::optional<std::int64_t> cap = std::nullopt) const;

  /// Representation equality: same digits and same precision.
  friend bool operator==(const LocalElement& a, const LocalElement& b);
  /// a - b is zero at the common precision.
  bool agrees_with(const LocalElement& b) const;

  std::string to_string() const;

 private:
  void normalize();
  void require_field() const;
  static LocalElement raw(const FieldPtr& f, std::int64_t lo, std::vector<Residue> d, std::int64_t prec);

  FieldPtr field_;
  std::int64_t lo_ = 0;
  std::vector<Residue> digits_;
  std::int64_t prec_ = kExact;
};

inline LocalElement operator/(const LocalElement& a, const LocalElement& b) { return a.div(b); }

}  // namespace carlitz
