#include "carlitz/local_element.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "carlitz/errors.hpp"

namespace carlitz {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= kExact || b >= kExact) return kExact;
  if (a <= -kExact || b <= -kExact) return -kExact;
  return std::clamp(a + b, -kExact, kExact);
}

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  __int128 r = static_cast<__int128>(a) * b;
  if (r >= kExact) return kExact;
  if (r <= -kExact) return -kExact;
  return static_cast<std::int64_t>(r);
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t q_power(std::uint64_t q, std::int64_t n) {
  __int128 r = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    r *= q;
    if (r >= kExact) throw Error("twist exponent q^n overflows");
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

LocalElement LocalElement::raw(const FieldPtr& f, std::int64_t lo, std::vector<Residue> d, std::int64_t prec) {
  LocalElement r(f, prec);
  r.lo_ = lo;
  r.digits_ = std::move(d);
  r.normalize();
  return r;
}

void LocalElement::normalize() {
  if (!is_exact() && !digits_.empty()) {
    std::int64_t keep = prec_ - lo_;
    if (keep <= 0)
      digits_.clear();
    else if (keep < static_cast<std::int64_t>(digits_.size()))
      digits_.resize(static_cast<std::size_t>(keep));
  }
  while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
  std::size_t first = 0;
  while (first < digits_.size() && digits_[first] == 0) ++first;
  if (first == digits_.size()) {
    digits_.clear();
    lo_ = 0;
    return;
  }
  if (first > 0) {
    digits_.erase(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(first));
    lo_ += static_cast<std::int64_t>(first);
  }
}

void LocalElement::require_field() const {
  if (!field_) throw Error("element has no field attached");
}

LocalElement LocalElement::from_int(const FieldPtr& f, std::int64_t n) {
  return constant(f, f->residue().from_int(n));
}

LocalElement LocalElement::constant(const FieldPtr& f, Residue c) { return monomial(f, c, 0); }

LocalElement LocalElement::monomial(const FieldPtr& f, Residue c, std::int64_t exponent, std::int64_t prec) {
  return raw(f, exponent, {c}, prec);
}

LocalElement LocalElement::from_terms(const FieldPtr& f, const std::map<std::int64_t, Residue>& terms,
                                      std::int64_t prec) {
  if (terms.empty()) return zero(f, prec);
  std::int64_t lo = terms.begin()->first;
  std::int64_t hi = terms.rbegin()->first;
  if (!is_exact_prec(prec)) hi = std::min(hi, prec - 1);
  if (hi < lo) return zero(f, prec);
  std::vector<Residue> d(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [e, c] : terms)
    if (e <= hi) d[static_cast<std::size_t>(e - lo)] = c;
  return raw(f, lo, std::move(d), prec);
}

LocalElement LocalElement::theta(const FieldPtr& f) {
  return monomial(f, f->residue().neg(1), -f->ram());
}

LocalElement LocalElement::zeta(const FieldPtr& f) { return monomial(f, 1, f->zeta_exponent()); }

Residue LocalElement::coeff(std::int64_t exponent) const {
  if (exponent < lo_ || exponent >= hi()) return 0;
  return digits_[static_cast<std::size_t>(exponent - lo_)];
}

std::map<std::int64_t, Residue> LocalElement::terms() const {
  std::map<std::int64_t, Residue> out;
  for (std::size_t k = 0; k < digits_.size(); ++k)
    if (digits_[k] != 0) out.emplace(lo_ + static_cast<std::int64_t>(k), digits_[k]);
  return out;
}

std::optional<std::int64_t> LocalElement::valuation() const {
  if (digits_.empty()) return std::nullopt;
  return lo_;
}

std::int64_t LocalElement::valuation_lower_bound() const { return digits_.empty() ? prec_ : lo_; }

Residue LocalElement::leading() const { return digits_.empty() ? 0 : digits_.front(); }

ZeroState LocalElement::zero_state() const {
  if (!digits_.empty()) return ZeroState::Nonzero;
  return is_exact() ? ZeroState::ExactZero : ZeroState::ZeroAtPrecision;
}

NormInfo LocalElement::norm() const {
  require_field();
  NormInfo n;
  if (!digits_.empty()) {
    n.valuation = lo_;
    n.log_q = Rational(-lo_, field_->ram());
  } else {
    n.upper_bound = true;
    n.log_q = Rational(-prec_, field_->ram());
  }
  return n;
}

bool LocalElement::is_monomial() const { return digits_.size() == 1; }

LocalElement LocalElement::truncate(std::int64_t prec) const {
  if (prec >= prec_) return *this;
  LocalElement r = *this;
  r.prec_ = prec;
  r.normalize();
  return r;
}

LocalElement LocalElement::operator-() const {
  LocalElement r = *this;
  if (field_) {
    const auto& R = field_->residue();
    for (auto& d : r.digits_) d = R.neg(d);
  }
  return r;
}

namespace {

void add_into(const ResidueField& R, std::vector<Residue>& acc, std::int64_t acc_lo, const std::vector<Residue>& src,
              std::int64_t src_lo, std::int64_t limit, bool negate) {
  for (std::size_t k = 0; k < src.size(); ++k) {
    std::int64_t e = src_lo + static_cast<std::int64_t>(k);
    if (e >= limit) break;
    Residue c = negate ? R.neg(src[k]) : src[k];
    auto& slot = acc[static_cast<std::size_t>(e - acc_lo)];
    slot = R.add(slot, c);
  }
}

}  // namespace

LocalElement& LocalElement::operator+=(const LocalElement& b) {
  if (!field_) field_ = b.field_;
  require_field();
  const std::int64_t prec = std::min(prec_, b.prec_);
  if (b.digits_.empty()) {
    if (prec < prec_) *this = truncate(prec);
    return *this;
  }
  if (digits_.empty()) {
    LocalElement r = b.truncate(prec);
    r.prec_ = prec;
    r.normalize();
    return *this = r;
  }
  const std::int64_t lo = std::min(lo_, b.lo_);
  const std::int64_t hi = std::min(std::max(this->hi(), b.hi()), prec);
  if (hi <= lo) {
    *this = raw(field_, 0, {}, prec);
    return *this;
  }
  std::vector<Residue> acc(static_cast<std::size_t>(hi - lo), 0);
  const auto& R = field_->residue();
  add_into(R, acc, lo, digits_, lo_, hi, false);
  add_into(R, acc, lo, b.digits_, b.lo_, hi, false);
  *this = raw(field_, lo, std::move(acc), prec);
  return *this;
}

LocalElement& LocalElement::operator-=(const LocalElement& b) { return *this += -b; }

LocalElement operator*(const LocalElement& a, const LocalElement& b) {
  const FieldPtr& f = a.field_ ? a.field_ : b.field_;
  if (!f) throw Error("element has no field attached");
  if (a.zero_state() == ZeroState::ExactZero || b.zero_state() == ZeroState::ExactZero) return LocalElement(f);
  const std::int64_t va = a.valuation_lower_bound();
  const std::int64_t vb = b.valuation_lower_bound();
  const std::int64_t prec = std::min(sat_add(a.prec_, vb), sat_add(b.prec_, va));
  if (a.digits_.empty() || b.digits_.empty()) return LocalElement(f, prec);

  const std::int64_t lo = a.lo_ + b.lo_;
  std::int64_t n = static_cast<std::int64_t>(a.digits_.size() + b.digits_.size() - 1);
  if (!is_exact_prec(prec)) n = std::min(n, prec - lo);
  if (n <= 0) return LocalElement(f, prec);

  const auto& R = f->residue();
  const std::size_t N = static_cast<std::size_t>(n);
  std::vector<Residue> out(N, 0);
  const auto& A = a.digits_;
  const auto& B = b.digits_;
  if (R.is_prime_field()) {
    const std::uint64_t p = R.characteristic();
    std::vector<std::uint64_t> acc(N, 0);
    // Products are < 2^40, so 2^23 of them fit before reduction is needed.
    for (std::size_t i = 0; i < A.size() && i < N; ++i) {
      const std::uint64_t ai = A[i];
      if (ai == 0) continue;
      const std::size_t jmax = std::min(B.size(), N - i);
      std::uint64_t* dst = acc.data() + i;
      for (std::size_t j = 0; j < jmax; ++j) dst[j] += ai * B[j];
      if ((i & 0xFFFF) == 0xFFFF)
        for (auto& x : acc) x %= p;
    }
    for (std::size_t k = 0; k < N; ++k) out[k] = static_cast<Residue>(acc[k] % p);
  } else {
    for (std::size_t i = 0; i < A.size() && i < N; ++i) {
      if (A[i] == 0) continue;
      const std::size_t jmax = std::min(B.size(), N - i);
      for (std::size_t j = 0; j < jmax; ++j)
        if (B[j] != 0) out[i + j] = R.add(out[i + j], R.mul(A[i], B[j]));
    }
  }
  return LocalElement::raw(f, lo, std::move(out), prec);
}

LocalElement LocalElement::inv(std::optional<std::int64_t> target) const {
  require_field();
  if (digits_.empty()) throw DivisionByIndistinguishableZero();
  const auto& R = field_->residue();
  const std::int64_t v = lo_;
  const Residue w0 = R.inv(digits_[0]);
  if (is_exact() && is_monomial()) return monomial(field_, w0, -v);

  std::int64_t prec;
  if (is_exact())
    prec = target.value_or(field_->default_prec());
  else
    prec = target ? std::min(*target, prec_ - 2 * v) : prec_ - 2 * v;
  const std::int64_t n = prec + v;  // number of digits of the unit part
  if (n <= 0) return zero(field_, prec);

  const std::size_t N = static_cast<std::size_t>(n);
  const std::size_t L = digits_.size();
  std::vector<Residue> w(N, 0);
  w[0] = w0;
  const Residue neg_w0 = R.neg(w0);
  if (R.is_prime_field()) {
    const std::uint64_t p = R.characteristic();
    for (std::size_t k = 1; k < N; ++k) {
      std::uint64_t s = 0;
      const std::size_t jmax = std::min(k, L - 1);
      for (std::size_t j = 1; j <= jmax; ++j) {
        s += static_cast<std::uint64_t>(digits_[j]) * w[k - j];
        if ((j & 0xFFFF) == 0) s %= p;
      }
      w[k] = static_cast<Residue>((s % p) * neg_w0 % p);
    }
  } else {
    for (std::size_t k = 1; k < N; ++k) {
      Residue s = 0;
      const std::size_t jmax = std::min(k, L - 1);
      for (std::size_t j = 1; j <= jmax; ++j)
        if (digits_[j] != 0 && w[k - j] != 0) s = R.add(s, R.mul(digits_[j], w[k - j]));
      w[k] = R.mul(s, neg_w0);
    }
  }
  return raw(field_, -v, std::move(w), prec);
}

LocalElement LocalElement::div(const LocalElement& b, std::optional<std::int64_t> target) const {
  b.require_field();
  if (b.digits_.empty()) throw DivisionByIndistinguishableZero();
  if (b.is_exact() && b.is_monomial()) {
    LocalElement r = *this * b.inv();
    return target ? r.truncate(*target) : r;
  }
  if (zero_state() == ZeroState::ExactZero) return LocalElement(b.field_);
  const std::int64_t t = target.value_or(b.field_->default_prec());
  const std::int64_t va = valuation_lower_bound();
  LocalElement r = *this * b.inv(t - va);
  return target ? r.truncate(*target) : r;
}

LocalElement LocalElement::pow(std::int64_t k, std::optional<std::int64_t> target) const {
  require_field();
  if (k == 0) return from_int(field_, 1);
  if (k < 0) {
    if (is_exact() && !is_monomial()) return pow(-k).inv(target);
    return inv(target).pow(-k);
  }
  if (is_exact() && is_monomial()) {
    return monomial(field_, field_->residue().pow(digits_[0], k), lo_ * k);
  }
  LocalElement result = from_int(field_, 1);
  LocalElement base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return target ? result.truncate(*target) : result;
}

LocalElement LocalElement::scale(Residue c) const {
  require_field();
  if (c == 0) return zero(field_);
  LocalElement r = *this;
  const auto& R = field_->residue();
  for (auto& d : r.digits_) d = R.mul(d, c);
  return r;
}

LocalElement LocalElement::shift(std::int64_t k) const {
  LocalElement r = *this;
  if (!r.digits_.empty()) r.lo_ += k;
  r.prec_ = sat_add(prec_, k);
  return r;
}

LocalElement LocalElement::twist(std::int64_t n, std::optional<std::int64_t> cap) const {
  require_field();
  const std::uint64_t q = field_->q();
  if (n == 0) return cap ? truncate(*cap) : *this;
  if (n > 0) {
    const std::int64_t Q = q_power(q, n);
    std::int64_t prec = sat_mul(prec_, Q);
    if (cap) prec = std::min(prec, *cap);
    if (digits_.empty()) return zero(field_, prec);
    const std::int64_t lo = sat_mul(lo_, Q);
    std::int64_t top = sat_mul(hi() - 1, Q);
    if (!is_exact_prec(prec)) top = std::min(top, prec - 1);
    if (top < lo) return zero(field_, prec);
    std::vector<Residue> d(static_cast<std::size_t>(top - lo + 1), 0);
    for (std::size_t k = 0; k < digits_.size(); ++k) {
      std::int64_t e = (lo_ + static_cast<std::int64_t>(k)) * Q;
      if (e > top) break;
      if (digits_[k] != 0) d[static_cast<std::size_t>(e - lo)] = field_->frob_q(digits_[k], n);
    }
    return raw(field_, lo, std::move(d), prec);
  }
  const std::int64_t Q = q_power(q, -n);
  for (std::size_t k = 0; k < digits_.size(); ++k) {
    std::int64_t e = lo_ + static_cast<std::int64_t>(k);
    if (digits_[k] != 0 && e % Q != 0)
      throw NotAQthPower("pi-exponent " + std::to_string(e) + " is not divisible by " + std::to_string(Q) +
                         "; the root leaves the working field");
  }
  std::int64_t prec = is_exact() ? kExact : ceil_div(prec_, Q);
  if (cap) prec = std::min(prec, *cap);
  if (digits_.empty()) return zero(field_, prec);
  const std::int64_t lo = lo_ / Q;
  const std::int64_t top = (hi() - 1) / Q;  // hi()-1 is a nonzero digit, divisible by Q
  std::vector<Residue> d(static_cast<std::size_t>(top - lo + 1), 0);
  for (std::size_t k = 0; k < digits_.size(); k += static_cast<std::size_t>(Q))
    d[k / static_cast<std::size_t>(Q)] = field_->frob_q(digits_[k], n);
  return raw(field_, lo, std::move(d), prec);
}

bool operator==(const LocalElement& a, const LocalElement& b) {
  return a.prec_ == b.prec_ && a.lo_ == b.lo_ && a.digits_ == b.digits_;
}

bool LocalElement::agrees_with(const LocalElement& b) const {
  return (*this - b).zero_state() != ZeroState::Nonzero;
}

std::string LocalElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  const bool prime = field_ && field_->residue().is_prime_field();
  for (std::size_t k = 0; k < digits_.size(); ++k) {
    Residue c = digits_[k];
    if (c == 0) continue;
    std::int64_t e = lo_ + static_cast<std::int64_t>(k);
    if (!first) os << " + ";
    first = false;
    std::string coef = prime ? std::to_string(c) : "[" + std::to_string(c) + "]";
    if (e == 0) {
      os << coef;
    } else {
      if (c != 1 || !prime) os << coef << "*";
      os << "pi";
      if (e != 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(pi^" << prec_ << ")";
  return os.str();
}

}  // namespace carlitz
