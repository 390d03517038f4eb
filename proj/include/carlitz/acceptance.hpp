#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carlitz/field.hpp"

namespace carlitz {

struct AcceptanceConfig {
  FieldConfig field;
  std::int64_t t_deg = 40;
  std::uint64_t seed = 20240917;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Pinned tolerances. Identities must vanish at precision, and that
/// precision must reach prec - kPrecSlack. Values read off a truncated
/// t-series at theta get kPrecSlackSeries: L_alpha has poles at theta^(q^i),
/// so 40 coefficients certify it at theta only to about pi^135.
inline constexpr std::int64_t kPrecSlack = 10;
inline constexpr std::int64_t kPrecSlackSeries = 80;
inline constexpr int kRandomPoints = 20;
inline constexpr int kRandomSeries = 100;
inline constexpr int kRandomMorphisms = 5;

inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, const AcceptanceConfig& cfg);
std::vector<CriterionResult> run_all(const AcceptanceConfig& cfg);

/// "PASS  3 name: detail"
std::string format_result(const CriterionResult& r);

}  // namespace carlitz
