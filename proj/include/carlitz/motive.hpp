#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "carlitz/tate_series.hpp"
#include "carlitz/tpoly.hpp"

namespace carlitz {

class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(FieldPtr f, std::size_t rows, std::size_t cols);
  static SeriesMatrix from_poly(const TPolyMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }
  TateSeries& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const TateSeries& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
  SeriesMatrix scale(const TateSeries& s) const;
  SeriesMatrix transpose() const;
  SeriesMatrix twist(std::int64_t n, std::optional<std::int64_t> cap = std::nullopt) const;
  SeriesMatrix kron(const SeriesMatrix& b) const;
  TateSeries det() const;
  /// adj / det with the determinant inverted as a unit of the Tate algebra.
  /// `t_deg` truncates the inverse when the determinant is a polynomial.
  SeriesMatrix inverse(std::int64_t t_deg) const;
  /// Largest precision below which no inexact entry is known.
  std::optional<std::int64_t> min_prec() const;
  /// Largest t_deg over entries that are not polynomials.
  std::int64_t max_t_deg() const;
  bool is_zero_at_precision() const;
  /// Entrywise maximum of Gauss norms.
  NormInfo gauss_norm() const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<TateSeries> e_;
};

enum class Provenance { One, CarlitzN, XAlphas, Tensor, Dual };
std::string provenance_name(Provenance p);

/// A pre-t-motive by a basis: Psi^(-1) = Phi Psi. Phi is kept twisted once
/// (Phi^(1) needs only forward Frobenius of the inputs); Phi itself is
/// present when the required q-th roots exist in the working field.
struct MotivePresentation {
  std::string name;
  std::size_t rank = 0;
  RationalMatrix phi_twisted;
  std::optional<RationalMatrix> phi_untwisted;
  SeriesMatrix psi;
  Provenance provenance = Provenance::One;

  /// Phi; throws NotAQthPower when it is not representable.
  const RationalMatrix& phi() const;
};

MotivePresentation make_one(const FieldPtr& f);
/// C(n): Phi = (t - theta)^n, Psi = Omega^n.
MotivePresentation make_carlitz_power(const FieldPtr& f, std::int64_t n, std::int64_t t_deg,
                                      std::optional<std::int64_t> prec = std::nullopt);
/// X(alpha_1..alpha_r). `sigma_alphas`, when given, supplies alpha_i^(-1)
/// (checked against alpha_i); otherwise it is taken from the working field
/// when it exists there.
MotivePresentation make_X(const std::vector<LocalElement>& alphas, std::int64_t t_deg,
                          std::optional<std::int64_t> prec = std::nullopt,
                          const std::vector<LocalElement>& sigma_alphas = {});
MotivePresentation tensor_presentation(const MotivePresentation& p, const MotivePresentation& q);
MotivePresentation dual_presentation(const MotivePresentation& p);

struct TrivializationCheck {
  NormInfo residual;
  /// Residual entries are known modulo pi^certified_prec.
  std::int64_t certified_prec = 0;
  bool pass = false;
};

/// den^(1) Psi - num^(1) Psi^(1), i.e. Psi = Phi^(1) Psi^(1) cleared of
/// denominators.
TrivializationCheck check_trivialization(const MotivePresentation& p);

struct MorphismCheck {
  TPolyMatrix residual;
  bool pass = false;
};

/// B Phi_Q^(1) - Phi_P^(1) B^(1) for B of size rank P x rank Q.
MorphismCheck check_morphism(const MotivePresentation& p, const MotivePresentation& q, const TPolyMatrix& b);

struct AndersonDet {
  LocalElement c;
  std::int64_t s = 0;
};

/// det phi = c (t - theta)^s with c exact and nonzero, or nullopt.
std::optional<AndersonDet> check_anderson_det(const RationalMatrix& phi);
/// Same for a presentation, read off Phi^(1) when Phi is not stored.
std::optional<AndersonDet> check_anderson_det(const MotivePresentation& p);

}  // namespace carlitz
