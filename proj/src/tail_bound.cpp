#include "carlitz/tail_bound.hpp"

#include <algorithm>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

std::int64_t add_inf(std::int64_t a, std::int64_t b) {
  if (a >= kInfVal || b >= kInfVal) return kInfVal;
  return std::clamp(a + b, -kInfVal, kInfVal);
}

std::int64_t mul_inf(std::int64_t a, std::int64_t b) {
  if (a >= kInfVal) return kInfVal;
  __int128 r = static_cast<__int128>(a) * b;
  if (r >= kInfVal) return kInfVal;
  if (r <= -kInfVal) return -kInfVal;
  return static_cast<std::int64_t>(r);
}

std::int64_t floor_rat(Rational r) {
  std::int64_t d = r.num / r.den;
  if (r.num % r.den != 0 && r.num < 0) --d;
  return d;
}

std::int64_t ceil_rat(Rational r) { return -floor_rat(-r); }

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return ceil_rat(Rational(a, b)); }

std::int64_t pow_sat(std::int64_t q, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r = mul_inf(r, q);
    if (r >= kInfVal) return kInfVal;
  }
  return r;
}

}  // namespace

TailPtr TailBound::omega(std::int64_t ram, std::int64_t q) {
  auto t = std::shared_ptr<TailBound>(new TailBound(Kind::Omega));
  t->params_ = {ram, q};
  return t;
}

TailPtr TailBound::lalpha(std::int64_t v, std::int64_t ram, std::int64_t q) {
  if ((q - 1) * v + ram * q <= 0) throw OutsideLogDomain();
  auto t = std::shared_ptr<TailBound>(new TailBound(Kind::LAlpha));
  t->params_ = {v, ram, q};
  return t;
}

TailPtr TailBound::polynomial(std::vector<std::int64_t> vals) {
  auto t = std::shared_ptr<TailBound>(new TailBound(Kind::Polynomial));
  while (!vals.empty() && vals.back() >= kInfVal) vals.pop_back();
  t->support_end_ = static_cast<std::int64_t>(vals.size()) - 1;
  t->params_ = std::move(vals);
  return t;
}

TailPtr TailBound::linear(Rational c0, Rational slope) {
  auto t = std::shared_ptr<TailBound>(new TailBound(Kind::Linear));
  t->params_ = {c0.num, c0.den, slope.num, slope.den};
  return t;
}

TailPtr TailBound::user(Rational c0, Rational slope) {
  auto t = std::shared_ptr<TailBound>(new TailBound(Kind::User));
  t->params_ = {c0.num, c0.den, slope.num, slope.den};
  return t;
}

TailPtr TailBound::product(TailPtr a, TailPtr b) {
  auto t = std::shared_ptr<TailBound>(new TailBound(Kind::Product));
  const auto& ea = a->support_end();
  const auto& eb = b->support_end();
  if ((ea && *ea < 0) || (eb && *eb < 0))
    t->support_end_ = -1;
  else if (ea && eb)
    t->support_end_ = *ea + *eb;
  t->children_ = {std::move(a), std::move(b)};
  return t;
}

TailPtr TailBound::sum(TailPtr a, TailPtr b) {
  auto t = std::shared_ptr<TailBound>(new TailBound(Kind::Sum));
  if (a->support_end() && b->support_end()) t->support_end_ = std::max(*a->support_end(), *b->support_end());
  t->children_ = {std::move(a), std::move(b)};
  return t;
}

TailPtr TailBound::twist(TailPtr a, std::int64_t n, std::int64_t q) {
  auto t = std::shared_ptr<TailBound>(new TailBound(Kind::Twist));
  t->support_end_ = a->support_end();
  t->params_ = {n, q};
  t->children_ = {std::move(a)};
  return t;
}

std::string TailBound::kind_name() const {
  switch (kind_) {
    case Kind::Omega: return "OMEGA";
    case Kind::LAlpha: return "LALPHA";
    case Kind::Product: return "PRODUCT";
    case Kind::Sum: return "SUM";
    case Kind::Twist: return "TWIST";
    case Kind::Polynomial: return "POLYNOMIAL";
    case Kind::Linear: return "LINEAR";
    case Kind::User: return "USER";
  }
  return "?";
}

std::int64_t TailBound::vmin(std::int64_t j) const {
  switch (kind_) {
    case Kind::Omega: {
      const std::int64_t ram = params_[0], q = params_[1];
      const std::int64_t top = mul_inf(pow_sat(q, j + 1), ram);
      return top >= kInfVal ? kInfVal : top / (q - 1);
    }
    case Kind::LAlpha: {
      const std::int64_t v = params_[0], ram = params_[1], q = params_[2];
      if (j == 0) return std::min(v, q * v + ram * q);
      return add_inf(q * v, mul_inf(ram * q, j + 1));
    }
    case Kind::Polynomial:
      return j < static_cast<std::int64_t>(params_.size()) ? params_[static_cast<std::size_t>(j)] : kInfVal;
    case Kind::Linear:
    case Kind::User:
      return ceil_rat(Rational(params_[0], params_[1]) + Rational(params_[2], params_[3]) * Rational(j));
    case Kind::Twist: {
      const std::int64_t n = params_[0], q = params_[1];
      const std::int64_t a = children_[0]->vmin(j);
      if (a >= kInfVal) return kInfVal;
      const std::int64_t Q = pow_sat(q, n < 0 ? -n : n);
      return n >= 0 ? mul_inf(a, Q) : ceil_div(a, Q);
    }
    case Kind::Sum:
      return std::min(children_[0]->vmin(j), children_[1]->vmin(j));
    case Kind::Product:
      return window(j + 1).back();
  }
  return kInfVal;
}

std::vector<std::int64_t> TailBound::window(std::int64_t n) const {
  std::vector<std::int64_t> w(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
  if (kind_ == Kind::Product) {
    auto a = children_[0]->window(n);
    auto b = children_[1]->window(n);
    for (std::int64_t j = 0; j < n; ++j) {
      std::int64_t best = kInfVal;
      for (std::int64_t i = 0; i <= j; ++i)
        best = std::min(best, add_inf(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j - i)]));
      w[static_cast<std::size_t>(j)] = best;
    }
    return w;
  }
  if (kind_ == Kind::Sum) {
    auto a = children_[0]->window(n);
    auto b = children_[1]->window(n);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = std::min(a[j], b[j]);
    return w;
  }
  if (kind_ == Kind::Twist) {
    auto a = children_[0]->window(n);
    const std::int64_t nn = params_[0], q = params_[1];
    const std::int64_t Q = pow_sat(q, nn < 0 ? -nn : nn);
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (a[j] >= kInfVal)
        w[j] = kInfVal;
      else
        w[j] = nn >= 0 ? mul_inf(a[j], Q) : ceil_div(a[j], Q);
    }
    return w;
  }
  for (std::int64_t j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = vmin(j);
  return w;
}

std::optional<Rational> TailBound::offset_for_slope(Rational s) const {
  if (support_end_) {
    if (*support_end_ < 0) return Rational(kInfVal / 1024);
    auto w = window(*support_end_ + 1);
    std::optional<Rational> best;
    for (std::int64_t j = 0; j <= *support_end_; ++j) {
      if (w[static_cast<std::size_t>(j)] >= kInfVal) continue;
      Rational v = Rational(w[static_cast<std::size_t>(j)]) - s * Rational(j);
      if (!best || v < *best) best = v;
    }
    return best.value_or(Rational(kInfVal / 1024));
  }
  switch (kind_) {
    case Kind::Omega: {
      // Convex in j: the minimum sits where the increments first reach s.
      std::optional<Rational> best;
      for (std::int64_t j = 0;; ++j) {
        const std::int64_t a = vmin(j), b = vmin(j + 1);
        Rational v = Rational(a) - s * Rational(j);
        if (!best || v < *best) best = v;
        if (b >= kInfVal || Rational(b - a) >= s) break;
      }
      return best;
    }
    case Kind::LAlpha: {
      const std::int64_t v = params_[0], ram = params_[1], q = params_[2];
      if (s > Rational(ram * q)) return std::nullopt;
      return std::min(Rational(std::min(v, q * v + ram * q)), Rational(q * v + 2 * ram * q) - s);
    }
    case Kind::Linear:
    case Kind::User:
      if (s > Rational(params_[2], params_[3])) return std::nullopt;
      return Rational(params_[0], params_[1]);
    case Kind::Sum: {
      auto a = children_[0]->offset_for_slope(s);
      auto b = children_[1]->offset_for_slope(s);
      if (!a || !b) return std::nullopt;
      return std::min(*a, *b);
    }
    case Kind::Product: {
      auto a = children_[0]->offset_for_slope(s);
      auto b = children_[1]->offset_for_slope(s);
      if (!a || !b) return std::nullopt;
      return *a + *b;
    }
    case Kind::Twist: {
      const std::int64_t n = params_[0];
      const std::int64_t Q = pow_sat(params_[1], n < 0 ? -n : n);
      if (n >= 0) {
        auto a = children_[0]->offset_for_slope(s * Rational(1, Q));
        if (!a) return std::nullopt;
        return *a * Rational(Q);
      }
      auto a = children_[0]->offset_for_slope(s * Rational(Q));
      if (!a) return std::nullopt;
      return *a * Rational(1, Q);
    }
    case Kind::Polynomial:
      break;
  }
  return std::nullopt;
}

std::optional<std::int64_t> TailBound::tail_precision(std::int64_t t_deg, std::int64_t val_a, std::int64_t cap) const {
  if (support_end_ && *support_end_ <= t_deg) return cap;
  std::int64_t W = std::max<std::int64_t>(2 * (t_deg + 1), t_deg + 64);
  std::int64_t best = cap;
  std::int64_t scanned = t_deg + 1;
  for (;;) {
    auto w = window(W);
    for (std::int64_t j = scanned; j < W; ++j)
      best = std::min(best, add_inf(w[static_cast<std::size_t>(j)], mul_inf(j, val_a)));
    scanned = W;
    if (support_end_ && *support_end_ < W) return best;
    // Past W use the best affine bound c(s) + (s + val_a) j among trial slopes.
    std::optional<std::int64_t> beyond;
    for (std::int64_t d = 1; d <= (1 << 20); d *= 2) {
      const Rational s(-val_a + d);
      auto c = offset_for_slope(s);
      if (!c) break;
      const std::int64_t b = ceil_rat(*c + Rational(d) * Rational(W));
      if (!beyond || b > *beyond) beyond = b;
    }
    if (!beyond) return std::nullopt;
    if (*beyond >= best) return best;
    if (W >= 4096) return std::min(best, *beyond);
    W *= 2;
  }
}

}  // namespace carlitz
