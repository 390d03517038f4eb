#pragma once

#include <cstdint>
#include <optional>

#include "carlitz/fq_poly.hpp"
#include "carlitz/local_element.hpp"
#include "carlitz/tate_series.hpp"

namespace carlitz {

/// exp_C(z) = sum z^(q^i) / D_i to absolute precision `prec`
/// (default_prec when absent), never beyond the precision z carries.
LocalElement carlitz_exp(const LocalElement& z, std::optional<std::int64_t> prec = std::nullopt);

/// log_C(z) = sum z^(q^i) / L_i for val(z) > -q*ram/(q-1).
/// Throws OutsideLogDomain otherwise.
LocalElement carlitz_log(const LocalElement& z, std::optional<std::int64_t> prec = std::nullopt);

/// pi~ = theta * zeta * prod_{i>=1} (1 - theta^(1-q^i))^-1.
LocalElement pi_tilde(const FieldPtr& f, std::optional<std::int64_t> prec = std::nullopt);

/// Omega = zeta^-q prod_{i>=1} (1 - t/theta^(q^i)) with coefficients to
/// t^t_deg at absolute precision `prec`, carrying an OMEGA tail.
TateSeries build_omega(const FieldPtr& f, std::int64_t t_deg, std::optional<std::int64_t> prec = std::nullopt);

/// L_alpha = alpha + sum_i alpha^(q^i) / ((t - theta^q)...(t - theta^(q^i)))
/// for exact alpha in the log domain, carrying an LALPHA tail.
TateSeries build_L_alpha(const LocalElement& alpha, std::int64_t t_deg,
                         std::optional<std::int64_t> prec = std::nullopt);

/// C_t(x) = theta x + x^q.
LocalElement carlitz_t(const LocalElement& x);

}  // namespace carlitz
