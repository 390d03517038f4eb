#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carlitz/fq_poly.hpp"
#include "carlitz/tpoly.hpp"

namespace carlitz {

/// Search space for relations. The window [v_lo, v_hi] is in units of
/// log_q|.|^-1 and covers the pi-exponents ram*(v_lo - 1) + 1 .. ram*v_hi,
/// so [-1, 0] holds theta^-1..1 and everything between.
struct SearchBounds {
  std::int64_t d_t = 1;
  std::int64_t v_lo = -1, v_hi = 0;
  std::int64_t prec = 200;
  std::int64_t t_deg = 40;
  std::int64_t margin = 2;

  std::int64_t exp_lo(std::int64_t ram) const { return ram * (v_lo - 1) + 1; }
  std::int64_t exp_hi(std::int64_t ram) const { return ram * v_hi; }
  void validate() const;
};

/// Coefficients of 1, Omega, Omega L_alpha_1, ..., Omega L_alpha_r, in that
/// order (slots const, X_0, X_1..X_r).
struct RelationVector {
  std::vector<TPoly> slots;
  std::string to_string() const;
};

struct SearchResult {
  /// A k(t)-independent subset of the kernel, in kernel-basis order.
  std::vector<RelationVector> relations;
  /// Dimension of the F_{q^e}-kernel inside the search space.
  std::size_t kernel_dim = 0;
  std::size_t rows = 0, cols = 0;
};

/// Kernel of the coordinate map (slot, t^j, pi^m) -> sum of coordinates of
/// slot * pi^m t^j. Basis vectors are in reduced echelon form under the
/// (slot, t-degree, pi-exponent) order, so each starts with a 1.
SearchResult search_relations(const FieldPtr& f, const std::vector<LocalElement>& alphas, const SearchBounds& b);
SearchResult search_relations(const std::vector<LocalElement>& alphas, const SearchBounds& b);

struct Certification {
  NormInfo residual;
  std::int64_t prec = 0;
  std::int64_t t_deg = 0;
  bool certified = false;
};

/// Recomputes the combination at margin * (prec, t_deg). A pass means
/// "vanishes at that precision", not a proof.
Certification certify_relation(const RelationVector& rel, const std::vector<LocalElement>& alphas,
                               const SearchBounds& b);

/// a_0(theta) + sum a_i(theta) log_C(alpha_i) - a_const(theta) pi~ = 0,
/// from dividing by Omega and using Omega(theta) = -1/pi~.
struct EvaluatedRelation {
  LocalElement c_const;
  LocalElement c_pitilde;
  std::vector<LocalElement> c_log;
  /// The left side evaluated numerically; zero at precision when it holds.
  LocalElement residual;
  /// Genuine relations have c_const = 0; anything else is reported here.
  NormInfo artifact_norm;
  bool artifact = false;
};

/// Throws NotCertified unless `cert` passed.
EvaluatedRelation evaluate_relation_at_theta(const RelationVector& rel, const std::vector<LocalElement>& alphas,
                                             const Certification& cert, std::int64_t prec);

struct GammaPoly {
  RatFun constant;
  RatFun x0;
  std::vector<RatFun> xs;
  /// G = (b0 - 1) F - F(b) (X_0 - 1), F primitive with leading unit 1.
  std::vector<RatFun> f_form;
  RatFun b0;
  RatFun f_of_b;
  /// H = scale * (G + f X_0): the Omega-slot correction and the scalar that
  /// brought the relation's other slots into F_q(t).
  TPoly f;
  LocalElement scale;
};

struct RelationReport {
  std::vector<RelationVector> relations;
  std::vector<GammaPoly> gamma_polys;
  std::size_t gamma_dim = 0;
  std::string gamma_dim_label;
};

/// Throws GammaExtractionFailed when a relation cannot be scaled so that
/// its constant and X_1..X_r coefficients lie in F_q(t).
RelationReport gamma_report(const std::vector<LocalElement>& alphas, const std::vector<RelationVector>& relations);

}  // namespace carlitz
