#include "carlitz/analytics.hpp"

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

std::int64_t qpow(const FieldPtr& f, std::int64_t i) {
  std::int64_t r = 1;
  for (std::int64_t k = 0; k < i; ++k) r = sat_mul(r, static_cast<std::int64_t>(f->q()));
  return r;
}

// (1 - x)^-1 for exact x of positive valuation, to absolute precision R.
LocalElement inv_one_minus(const LocalElement& x, std::int64_t R) {
  const LocalElement one = LocalElement::from_int(x.field(), 1);
  return (one - x).inv(std::max<std::int64_t>(R, 1));
}

bool in_log_domain(std::int64_t v, const FieldPtr& f) {
  const std::int64_t q = static_cast<std::int64_t>(f->q());
  return (q - 1) * v + q * f->ram() > 0;
}

}  // namespace

LocalElement carlitz_t(const LocalElement& x) { return LocalElement::theta(x.field()) * x + x.twist(1); }

LocalElement carlitz_exp(const LocalElement& z, std::optional<std::int64_t> prec) {
  const FieldPtr& f = z.field();
  const std::int64_t P = prec.value_or(f->default_prec());
  if (z.zero_state() == ZeroState::ExactZero) return z;
  const std::int64_t ram = f->ram();
  const std::int64_t v = z.valuation_lower_bound();
  const LocalElement th = LocalElement::theta(f);
  LocalElement result = LocalElement::zero(f);
  for (std::int64_t i = 0;; ++i) {
    const std::int64_t Q = qpow(f, i);
    // Term i has valuation q^i (v + i ram); past the point where v + i ram > 0 it only grows.
    const std::int64_t b = sat_mul(Q, v + i * ram);
    if (v + i * ram > 0 && b >= P) break;
    if (b >= P) continue;
    const std::int64_t dval = sat_mul(ram * i, Q);
    const std::int64_t R = P - b;
    LocalElement unit = LocalElement::from_int(f, 1);
    for (std::int64_t j = 0; j < i; ++j) unit = unit * inv_one_minus(th.pow(qpow(f, j) - Q), R);
    LocalElement term = z.twist(i, P - dval) * unit * th.pow(-i * Q);
    result += term;
  }
  return result.truncate(P);
}

LocalElement carlitz_log(const LocalElement& z, std::optional<std::int64_t> prec) {
  const FieldPtr& f = z.field();
  const std::int64_t P = prec.value_or(f->default_prec());
  if (z.zero_state() == ZeroState::ExactZero) return z;
  const std::int64_t v = z.valuation_lower_bound();
  if (!in_log_domain(v, f)) throw OutsideLogDomain();
  const std::int64_t ram = f->ram();
  const std::int64_t q = static_cast<std::int64_t>(f->q());
  const LocalElement th = LocalElement::theta(f);
  LocalElement result = LocalElement::zero(f);
  for (std::int64_t i = 0;; ++i) {
    const std::int64_t Q = qpow(f, i);
    const std::int64_t dval = ram * (Q * q - q) / (q - 1);  // val of 1/L_i
    const std::int64_t b = sat_add(sat_mul(Q, v), dval);
    if (b >= P) break;
    const std::int64_t R = P - b;
    LocalElement mono = LocalElement::from_int(f, 1);
    LocalElement unit = LocalElement::from_int(f, 1);
    for (std::int64_t j = 1; j <= i; ++j) {
      const std::int64_t qj = qpow(f, j);
      mono = mono * -th.pow(-qj);
      unit = unit * inv_one_minus(th.pow(1 - qj), R);
    }
    result += z.twist(i, P - dval) * mono * unit;
  }
  return result.truncate(P);
}

LocalElement pi_tilde(const FieldPtr& f, std::optional<std::int64_t> prec) {
  const std::int64_t P = prec.value_or(f->default_prec());
  const std::int64_t ram = f->ram();
  const std::int64_t v0 = -ram + f->zeta_exponent();
  const std::int64_t R = P - v0;
  const LocalElement th = LocalElement::theta(f);
  LocalElement unit = LocalElement::from_int(f, 1);
  for (std::int64_t i = 1; ram * (qpow(f, i) - 1) < R; ++i) unit = unit * inv_one_minus(th.pow(1 - qpow(f, i)), R);
  return (th * LocalElement::zeta(f) * unit).truncate(P);
}

TateSeries build_omega(const FieldPtr& f, std::int64_t t_deg, std::optional<std::int64_t> prec) {
  const std::int64_t P = prec.value_or(f->default_prec());
  const std::int64_t q = static_cast<std::int64_t>(f->q());
  const std::int64_t ram = f->ram();
  const std::int64_t v0 = ram * q / (q - 1);
  const LocalElement th = LocalElement::theta(f);
  TateSeries prod = TateSeries::constant(LocalElement::zeta(f).pow(-q));
  for (std::int64_t i = 1; v0 + ram * qpow(f, i) < P; ++i) {
    const LocalElement c = th.pow(-qpow(f, i));
    prod = prod * TateSeries::polynomial(f, {LocalElement::from_int(f, 1), -c});
  }
  std::vector<LocalElement> coeffs(static_cast<std::size_t>(t_deg + 1));
  for (std::int64_t j = 0; j <= t_deg; ++j) coeffs[static_cast<std::size_t>(j)] = prod.coeff(j).truncate(P);
  return TateSeries(f, std::move(coeffs), false, TailBound::omega(ram, q));
}

TateSeries build_L_alpha(const LocalElement& alpha, std::int64_t t_deg, std::optional<std::int64_t> prec) {
  const FieldPtr& f = alpha.field();
  const std::int64_t P = prec.value_or(f->default_prec());
  if (alpha.zero_state() == ZeroState::ExactZero) return TateSeries::zero(f);
  const std::int64_t v = alpha.valuation_lower_bound();
  if (!in_log_domain(v, f)) throw OutsideLogDomain();
  const std::int64_t q = static_cast<std::int64_t>(f->q());
  const std::int64_t ram = f->ram();
  auto term_val = [&](std::int64_t i) { return sat_add(sat_mul(qpow(f, i), v), ram * (qpow(f, i) * q - q) / (q - 1)); };
  std::int64_t I = 0;
  while (term_val(I + 1) < P) ++I;

  const LocalElement th = LocalElement::theta(f);
  TateSeries S = TateSeries::constant(alpha.twist(I, P));
  for (std::int64_t i = I; i >= 1; --i) {
    S = S.div_t_minus(th.pow(qpow(f, i)), t_deg);
    S = (S + TateSeries::constant(alpha.twist(i - 1, P))).truncate_prec(P);
  }
  std::vector<LocalElement> coeffs(static_cast<std::size_t>(t_deg + 1));
  for (std::int64_t j = 0; j <= t_deg; ++j) coeffs[static_cast<std::size_t>(j)] = S.coeff(j).truncate(P);
  return TateSeries(f, std::move(coeffs), false, TailBound::lalpha(v, ram, q));
}

}  // namespace carlitz
