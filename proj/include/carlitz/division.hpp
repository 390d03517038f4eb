#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "carlitz/local_element.hpp"
#include "carlitz/rational.hpp"

namespace carlitz {

struct NewtonSegment {
  /// Slope of the hull edge; roots on this edge have valuation -slope.
  Rational slope;
  std::int64_t start = 0;
  std::int64_t length = 0;
  /// Leading residues of the coefficients lying on the edge, indexed from
  /// `start`; zero where a coefficient sits strictly above it.
  std::vector<Residue> residual;

  Rational root_valuation() const { return -slope; }
};

struct NewtonPolygon {
  std::vector<std::pair<std::int64_t, std::int64_t>> vertices;
  std::vector<NewtonSegment> segments;
  /// Multiplicity of the root 0 (index of the first nonzero coefficient).
  std::int64_t zero_roots = 0;
};

/// Lower convex hull of (i, val c_i) for sum c_i x^i.
/// Throws IndeterminateValuation when a coefficient that is zero at its
/// precision could still move the hull.
NewtonPolygon newton_polygon(const std::vector<LocalElement>& coeffs);

/// Distinct roots in F_{q^e} of sum r_i y^i, ascending.
std::vector<Residue> residual_roots(const FieldPtr& f, const std::vector<Residue>& r);

/// All q solutions of theta x + x^q = beta, largest norm first; equal norms
/// are ordered by their digit sequences from the leading digit down. Works
/// to precision min(beta.prec(), prec or default_prec).
std::vector<LocalElement> division_points(const LocalElement& beta, std::optional<std::int64_t> prec = std::nullopt);

struct ReductionResult {
  LocalElement alpha;
  std::int64_t n = 0;
  /// C_{t^n}(alpha) - beta and exp_C(theta^n log_C alpha) - beta.
  LocalElement action_residual;
  LocalElement exp_residual;

  bool verified() const { return action_residual.is_zero() && exp_residual.is_zero(); }
};

/// Pulls beta into the log domain by repeated t-division:
/// beta = C_{t^n}(alpha) with |alpha| < |theta|^(q/(q-1)).
ReductionResult reduce_log(const LocalElement& beta, std::optional<std::int64_t> prec = std::nullopt);

}  // namespace carlitz
