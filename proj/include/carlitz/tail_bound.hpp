#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "carlitz/rational.hpp"

namespace carlitz {

/// Sentinel for "coefficient known to vanish".
inline constexpr std::int64_t kInfVal = INT64_MAX / 4;

class TailBound;
using TailPtr = std::shared_ptr<const TailBound>;

/// Certificate j -> vmin(j): a lower bound on the pi-valuation of the j-th
/// t-coefficient of the exact series an approximation stands for. Nodes are
/// immutable and shared, so arithmetic on series combines them into a DAG.
class TailBound {
 public:
  enum class Kind { Omega, LAlpha, Product, Sum, Twist, Polynomial, Linear, User };

  /// Coefficients of zeta^(-q) prod_{i>=1} (1 - t/theta^(q^i)).
  static TailPtr omega(std::int64_t ram, std::int64_t q);
  /// Coefficients of L_alpha for v = val(alpha) in the log domain.
  static TailPtr lalpha(std::int64_t v_alpha, std::int64_t ram, std::int64_t q);
  static TailPtr product(TailPtr a, TailPtr b);
  static TailPtr sum(TailPtr a, TailPtr b);
  static TailPtr twist(TailPtr a, std::int64_t n, std::int64_t q);
  /// Finite support with the given coefficient valuations (kInfVal for zero).
  static TailPtr polynomial(std::vector<std::int64_t> vals);
  /// vmin(j) = ceil(c0 + slope*j).
  static TailPtr linear(Rational c0, Rational slope);
  static TailPtr user(Rational c0, Rational slope);

  Kind kind() const { return kind_; }
  std::string kind_name() const;
  std::int64_t vmin(std::int64_t j) const;
  /// vmin(0), ..., vmin(n-1).
  std::vector<std::int64_t> window(std::int64_t n) const;
  /// Last index that may be nonzero, when the support is finite (-1 for zero).
  const std::optional<std::int64_t>& support_end() const { return support_end_; }

  /// The largest c with vmin(j) >= c + s*j for every j, or nullopt when the
  /// certified valuations grow slower than slope s.
  std::optional<Rational> offset_for_slope(Rational s) const;

  /// min(cap, min_{j > t_deg} vmin(j) + j*val_a), or nullopt when no slope
  /// beats -val_a (the series is not certified to converge at that point).
  std::optional<std::int64_t> tail_precision(std::int64_t t_deg, std::int64_t val_a, std::int64_t cap) const;

  const std::vector<TailPtr>& children() const { return children_; }
  const std::vector<std::int64_t>& int_params() const { return params_; }

 private:
  explicit TailBound(Kind k) : kind_(k) {}

  Kind kind_;
  std::vector<TailPtr> children_;
  std::vector<std::int64_t> params_;
  std::optional<std::int64_t> support_end_;
};

}  // namespace carlitz
