#include "carlitz/tate_series.hpp"

#include <algorithm>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

std::int64_t series_t_deg(const TateSeries& a, const TateSeries& b) {
  if (!a.exact_t() && !b.exact_t()) return std::min(a.t_deg(), b.t_deg());
  return a.exact_t() ? b.t_deg() : a.t_deg();
}

TailPtr tail_sum(const TateSeries& a, const TateSeries& b) {
  if (!a.has_tail() || !b.has_tail()) return nullptr;
  return TailBound::sum(a.tail(), b.tail());
}

TailPtr tail_product(const TateSeries& a, const TateSeries& b) {
  if (!a.has_tail() || !b.has_tail()) return nullptr;
  return TailBound::product(a.tail(), b.tail());
}

}  // namespace

TateSeries::TateSeries(FieldPtr f, std::vector<LocalElement> coeffs, bool exact_t, TailPtr tail)
    : field_(std::move(f)), coeffs_(std::move(coeffs)), exact_t_(exact_t), tail_(exact_t ? nullptr : std::move(tail)) {
  for (auto& c : coeffs_)
    if (!c.field()) c = LocalElement::zero(field_);
  if (exact_t_)
    while (!coeffs_.empty() && coeffs_.back().zero_state() == ZeroState::ExactZero) coeffs_.pop_back();
}

TateSeries TateSeries::t_minus(const LocalElement& c) {
  return polynomial(c.field(), {-c, LocalElement::from_int(c.field(), 1)});
}

LocalElement TateSeries::coeff(std::int64_t j) const {
  if (j >= 0 && j < static_cast<std::int64_t>(coeffs_.size())) return coeffs_[static_cast<std::size_t>(j)];
  if (j < 0 || exact_t_) return LocalElement::zero(field_);
  throw InsufficientTruncation("coefficient " + std::to_string(j) + " is past the truncation order " +
                               std::to_string(t_deg()));
}

TailPtr TateSeries::tail() const {
  if (!exact_t_) return tail_;
  std::vector<std::int64_t> vals;
  vals.reserve(coeffs_.size());
  for (const auto& c : coeffs_)
    vals.push_back(c.zero_state() == ZeroState::ExactZero ? kInfVal : c.valuation_lower_bound());
  return TailBound::polynomial(std::move(vals));
}

std::int64_t TateSeries::min_prec() const {
  std::int64_t p = kExact;
  for (const auto& c : coeffs_) p = std::min(p, c.prec());
  return p;
}

TateSeries TateSeries::operator-() const {
  TateSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TateSeries operator+(const TateSeries& a, const TateSeries& b) {
  const FieldPtr& f = a.field_ ? a.field_ : b.field_;
  if (a.exact_t_ && b.exact_t_) {
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<LocalElement> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = a.coeff(static_cast<std::int64_t>(j)) + b.coeff(static_cast<std::int64_t>(j));
    return TateSeries(f, std::move(c), true);
  }
  const std::int64_t T = series_t_deg(a, b);
  std::vector<LocalElement> c(static_cast<std::size_t>(T + 1));
  for (std::int64_t j = 0; j <= T; ++j) c[static_cast<std::size_t>(j)] = a.coeff(j) + b.coeff(j);
  return TateSeries(f, std::move(c), false, tail_sum(a, b));
}

TateSeries operator-(const TateSeries& a, const TateSeries& b) { return a + (-b); }

TateSeries operator*(const TateSeries& a, const TateSeries& b) {
  const FieldPtr& f = a.field_ ? a.field_ : b.field_;
  const bool exact = a.exact_t_ && b.exact_t_;
  const std::int64_t T = exact ? (a.coeffs_.empty() || b.coeffs_.empty() ? -1 : a.t_deg() + b.t_deg())
                               : series_t_deg(a, b);
  std::vector<LocalElement> c(static_cast<std::size_t>(std::max<std::int64_t>(T + 1, 0)), LocalElement::zero(f));
  const std::int64_t na = std::min<std::int64_t>(a.t_deg(), T);
  const std::int64_t nb = std::min<std::int64_t>(b.t_deg(), T);
  for (std::int64_t i = 0; i <= na; ++i) {
    const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai.zero_state() == ZeroState::ExactZero) continue;
    for (std::int64_t j = 0; j <= nb && i + j <= T; ++j) {
      const auto& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj.zero_state() == ZeroState::ExactZero) continue;
      c[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  if (exact) return TateSeries(f, std::move(c), true);
  return TateSeries(f, std::move(c), false, tail_product(a, b));
}

TateSeries TateSeries::scale(const LocalElement& s) const {
  TateSeries r = *this;
  for (auto& c : r.coeffs_) c = c * s;
  if (exact_t_) return TateSeries(field_, std::move(r.coeffs_), true);
  if (tail_) {
    const std::int64_t v = s.zero_state() == ZeroState::ExactZero ? kInfVal : s.valuation_lower_bound();
    r.tail_ = TailBound::product(tail_, TailBound::polynomial({v}));
  }
  return r;
}

TateSeries TateSeries::twist(std::int64_t n, std::optional<std::int64_t> cap) const {
  TateSeries r = *this;
  for (auto& c : r.coeffs_) c = c.twist(n, cap);
  if (tail_) r.tail_ = TailBound::twist(tail_, n, static_cast<std::int64_t>(field_->q()));
  if (exact_t_) return TateSeries(field_, std::move(r.coeffs_), true);
  return r;
}

TateSeries TateSeries::invert_unit(std::optional<std::int64_t> t_deg_opt) const {
  if (exact_t_ && !t_deg_opt) throw Error("inverting a polynomial needs an explicit t truncation order");
  const std::int64_t T = t_deg_opt ? (exact_t_ ? *t_deg_opt : std::min(*t_deg_opt, t_deg())) : t_deg();
  const LocalElement c0 = coeff(0);
  if (!c0.valuation()) throw NotAUnit("constant term is zero at its precision");
  const std::int64_t v0 = *c0.valuation();
  for (std::int64_t j = 1; j < static_cast<std::int64_t>(coeffs_.size()); ++j) {
    const auto& c = coeffs_[static_cast<std::size_t>(j)];
    if (c.zero_state() == ZeroState::ExactZero) continue;
    if (c.valuation_lower_bound() <= v0)
      throw NotAUnit("coefficient of t^" + std::to_string(j) + " is not dominated by the constant term");
  }
  const LocalElement w0 = c0.inv(min_prec() < kExact ? std::optional<std::int64_t>(min_prec() - 2 * v0) : std::nullopt);
  const LocalElement neg_w0 = -w0;
  std::vector<LocalElement> g(static_cast<std::size_t>(T + 1));
  g[0] = w0;
  const std::int64_t last = exact_t_ ? t_deg() : T;
  for (std::int64_t k = 1; k <= T; ++k) {
    LocalElement s = LocalElement::zero(field_);
    for (std::int64_t j = 1; j <= std::min(k, last); ++j) {
      const auto& fj = coeffs_[static_cast<std::size_t>(j)];
      if (fj.zero_state() == ZeroState::ExactZero) continue;
      s += fj * g[static_cast<std::size_t>(k - j)];
    }
    g[static_cast<std::size_t>(k)] = s * neg_w0;
  }

  TailPtr inv_tail;
  if (has_tail()) {
    // With val(f_j/f_0) >= d + s*j (d <= 0), coefficient n of the inverse has
    // valuation >= -v0 + n*(s + d); keep the best such rate over trial slopes.
    TailPtr t = tail();
    std::optional<Rational> rate;
    for (std::int64_t s = 1; s <= 4096; s = s < 64 ? s + 1 : s * 2) {
      auto c = t->offset_for_slope(Rational(s));
      if (!c) break;
      Rational r = Rational(s) + std::min(Rational(0), *c - Rational(v0));
      if (!rate || r > *rate) rate = r;
    }
    if (t->support_end() && *t->support_end() <= 0)
      inv_tail = TailBound::polynomial({-v0});
    else if (rate && *rate > Rational(0))
      inv_tail = TailBound::linear(Rational(-v0), *rate);
  }
  return TateSeries(field_, std::move(g), false, inv_tail);
}

TateSeries TateSeries::div_t_minus(const LocalElement& c, std::optional<std::int64_t> t_deg_opt) const {
  if (!c.valuation() || *c.valuation() >= 0) throw NotAUnit("t - c is a unit only for |c| > 1");
  if (exact_t_ && !t_deg_opt) throw Error("dividing a polynomial by t - c needs an explicit t truncation order");
  const std::int64_t T = t_deg_opt ? (exact_t_ ? *t_deg_opt : std::min(*t_deg_opt, t_deg())) : t_deg();
  const LocalElement cinv = c.inv(c.is_exact() ? std::optional<std::int64_t>(min_prec()) : std::nullopt);
  std::vector<LocalElement> g(static_cast<std::size_t>(T + 1));
  g[0] = -(coeff(0) * cinv);
  for (std::int64_t k = 1; k <= T; ++k) g[static_cast<std::size_t>(k)] = (g[static_cast<std::size_t>(k - 1)] - coeff(k)) * cinv;
  TailPtr t;
  if (has_tail()) {
    const std::int64_t vc = *c.valuation();
    t = TailBound::product(tail(), TailBound::linear(Rational(-vc), Rational(-vc)));
  }
  return TateSeries(field_, std::move(g), false, t);
}

TateSeries TateSeries::truncate_t(std::int64_t T) const {
  if (exact_t_ && T >= t_deg()) return *this;
  std::vector<LocalElement> c(static_cast<std::size_t>(T + 1));
  for (std::int64_t j = 0; j <= T; ++j) c[static_cast<std::size_t>(j)] = coeff(j);
  return TateSeries(field_, std::move(c), false, tail());
}

TateSeries TateSeries::truncate_prec(std::int64_t prec) const {
  TateSeries r = *this;
  for (auto& c : r.coeffs_) c = c.truncate(prec);
  return r;
}

TateSeries TateSeries::with_tail(TailPtr t) const {
  TateSeries r = *this;
  if (!exact_t_) r.tail_ = std::move(t);
  return r;
}

NormInfo TateSeries::gauss_norm() const {
  std::optional<std::int64_t> best;
  std::int64_t zero_prec = kExact;
  for (const auto& c : coeffs_) {
    if (auto v = c.valuation())
      best = best ? std::min(*best, *v) : *v;
    else
      zero_prec = std::min(zero_prec, c.prec());
  }
  NormInfo n;
  const std::int64_t ram = field_->ram();
  if (best && *best < zero_prec) {
    n.valuation = best;
    n.log_q = Rational(-*best, ram);
  } else {
    n.upper_bound = true;
    n.valuation = best;
    n.log_q = Rational(-std::min(best.value_or(kExact), zero_prec), ram);
  }
  return n;
}

bool TateSeries::is_zero_at_precision() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LocalElement& c) { return c.is_zero(); });
}

LocalElement TateSeries::eval(const LocalElement& a) const {
  if (a.valuation_lower_bound() < 0) throw OutsideUnitDisk();
  LocalElement acc = LocalElement::zero(field_);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * a + coeffs_[k];
  if (!exact_t_ && tail_ && a.zero_state() != ZeroState::ExactZero) {
    if (auto tp = tail_->tail_precision(t_deg(), a.valuation_lower_bound(), acc.prec())) acc = acc.truncate(*tp);
  }
  return acc;
}

LocalElement TateSeries::eval_entire(const LocalElement& a, std::optional<std::int64_t> required_prec) const {
  if (!has_tail()) throw InsufficientTruncation("series carries no tail certificate; evaluation outside the unit disk is not certified");
  if (a.zero_state() == ZeroState::ExactZero) return coeff(0);
  const std::int64_t va = a.valuation_lower_bound();
  const TailPtr t = tail();
  const auto vmins = t->window(static_cast<std::int64_t>(coeffs_.size()));
  LocalElement acc = LocalElement::zero(field_);
  LocalElement apow = LocalElement::from_int(field_, 1);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    LocalElement c = coeffs_[j];
    if (c.zero_state() == ZeroState::ZeroAtPrecision && vmins[j] > c.prec())
      c = LocalElement::zero(field_, std::min<std::int64_t>(vmins[j], kExact));
    if (c.zero_state() != ZeroState::ExactZero) acc += c * apow;
    if (j + 1 < coeffs_.size()) apow = apow * a;
  }
  if (!exact_t_) {
    auto tp = t->tail_precision(t_deg(), va, acc.prec());
    if (!tp) throw InsufficientTruncation("tail certificate does not decay at this point");
    acc = acc.truncate(*tp);
  }
  if (required_prec && acc.prec() < *required_prec)
    throw InsufficientTruncation("certified precision " + std::to_string(acc.prec()) + " is below the requested " +
                                 std::to_string(*required_prec));
  return acc;
}

}  // namespace carlitz
