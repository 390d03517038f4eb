#include "carlitz/field.hpp"

#include <algorithm>
#include <sstream>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

constexpr std::uint64_t kMaxResidueSize = 1u << 20;
constexpr std::uint32_t kAddTableLimit = 1024;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, lowest degree first.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  std::uint32_t lead_inv = 1;
  for (std::uint32_t x = 1; x < p; ++x)
    if ((x * m.back()) % p == 1) lead_inv = x;
  while (a.size() > dm) {
    std::uint32_t c = (a.back() * lead_inv) % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - (c * m[i]) % p)) % p;
    trim(a);
  }
  return a;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  if (d <= 1) return true;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (std::size_t k = 1; k <= d / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      Poly g(k + 1);
      std::uint64_t x = enc;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      g[k] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::uint64_t FieldConfig::q() const {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < m; ++i) r *= p;
  return r;
}

void FieldConfig::validate() const {
  if (!is_prime(p)) throw ConfigError("p = " + std::to_string(p) + " is not prime");
  if (m < 1 || e < 1) throw ConfigError("m and e must be positive");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < m * e; ++i) {
    size *= p;
    if (size > kMaxResidueSize) throw ConfigError("residue field F_{q^e} too large for table arithmetic");
  }
  const std::uint64_t qq = q();
  if (ram < 1 || ram % static_cast<std::int64_t>(qq - 1) != 0)
    throw ConfigError("ram must be a positive multiple of q-1 = " + std::to_string(qq - 1));
  if (default_prec < 1) throw ConfigError("default precision must be at least 1");
}

ResidueField::ResidueField(std::uint32_t p, std::uint32_t degree) : p_(p), d_(degree), n_(1) {
  for (std::uint32_t i = 0; i < d_; ++i) n_ *= p_;

  // Smallest monic irreducible by the encoding sum c_i p^i.
  const std::uint32_t lower = n_;
  for (std::uint32_t enc = 0; enc < lower; ++enc) {
    Poly f(d_ + 1);
    std::uint32_t x = enc;
    for (std::uint32_t i = 0; i < d_; ++i) {
      f[i] = x % p_;
      x /= p_;
    }
    f[d_] = 1;
    if (irreducible(f, p_)) {
      modulus_.assign(f.begin(), f.end() - 1);
      break;
    }
  }

  if (n_ <= kAddTableLimit && p_ != 2 && d_ > 1) {
    add_table_.resize(static_cast<std::size_t>(n_) * n_);
    neg_table_.resize(n_);
    for (Residue a = 0; a < n_; ++a) {
      auto ca = coords(a);
      std::vector<std::uint32_t> cn(d_);
      for (std::uint32_t i = 0; i < d_; ++i) cn[i] = (p_ - ca[i]) % p_;
      neg_table_[a] = from_coords(cn);
      for (Residue b = 0; b < n_; ++b) {
        auto cb = coords(b);
        std::vector<std::uint32_t> cs(d_);
        for (std::uint32_t i = 0; i < d_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
        add_table_[static_cast<std::size_t>(a) * n_ + b] = from_coords(cs);
      }
    }
  }

  // Discrete log tables from the first element of full order.
  log_.assign(n_, 0);
  exp_.assign(2 * static_cast<std::size_t>(n_), 0);
  if (n_ == 2) {
    exp_[0] = exp_[1] = exp_[2] = 1;
    return;
  }
  for (Residue g = 1; g < n_; ++g) {
    Residue x = 1;
    std::uint32_t order = 0;
    do {
      x = mul_reference(x, g);
      ++order;
    } while (x != 1 && order < n_);
    if (order != n_ - 1) continue;
    x = 1;
    for (std::uint32_t k = 0; k < n_ - 1; ++k) {
      exp_[k] = x;
      log_[x] = k;
      x = mul_reference(x, g);
    }
    for (std::uint32_t k = n_ - 1; k < 2 * (n_ - 1); ++k) exp_[k] = exp_[k - (n_ - 1)];
    return;
  }
  throw ConfigError("no primitive element found");
}

Residue ResidueField::add(Residue a, Residue b) const {
  if (d_ == 1) {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * n_ + b];
  Residue r = 0, scale = 1;
  while (a || b) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Residue ResidueField::neg(Residue a) const {
  if (d_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  if (!neg_table_.empty()) return neg_table_[a];
  Residue r = 0, scale = 1;
  while (a) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Residue ResidueField::sub(Residue a, Residue b) const { return add(a, neg(b)); }

Residue ResidueField::mul(Residue a, Residue b) const {
  if (a == 0 || b == 0) return 0;
  if (d_ == 1) return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  return exp_[log_[a] + log_[b]];
}

Residue ResidueField::inv(Residue a) const {
  if (a == 0) throw DivisionByIndistinguishableZero();
  if (n_ == 2) return 1;
  return exp_[(n_ - 1 - log_[a]) % (n_ - 1)];
}

Residue ResidueField::pow(Residue a, std::int64_t k) const {
  if (k == 0) return 1;
  if (a == 0) {
    if (k < 0) throw DivisionByIndistinguishableZero();
    return 0;
  }
  if (n_ == 2) return 1;
  const std::int64_t ord = n_ - 1;
  std::int64_t e = ((static_cast<std::int64_t>(log_[a]) * (k % ord)) % ord + ord) % ord;
  return exp_[e];
}

Residue ResidueField::frobenius(Residue a, std::int64_t k) const {
  if (a == 0 || n_ == 2) return a;
  std::int64_t kk = ((k % d_) + d_) % d_;
  std::int64_t e = 1;
  for (std::int64_t i = 0; i < kk; ++i) e *= p_;
  return pow(a, e);
}

Residue ResidueField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

std::vector<std::uint32_t> ResidueField::coords(Residue a) const {
  std::vector<std::uint32_t> c(d_);
  for (std::uint32_t i = 0; i < d_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Residue ResidueField::from_coords(const std::vector<std::uint32_t>& c) const {
  Residue r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * p_ + (c[i] % p_);
  return r;
}

Residue ResidueField::mul_reference(Residue a, Residue b) const {
  auto ca = coords(a), cb = coords(b);
  Poly prod(2 * d_, 0);
  for (std::uint32_t i = 0; i < d_; ++i)
    for (std::uint32_t j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  Poly m(modulus_.begin(), modulus_.end());
  m.push_back(1);
  Poly r = poly_mod(prod, m, p_);
  r.resize(d_, 0);
  return from_coords(r);
}

Field::Field(FieldConfig cfg) : cfg_((cfg.validate(), cfg)), residue_(cfg.p, cfg.m * cfg.e), q_(cfg.q()) {
  for (Residue c = 0; c < residue_.size(); ++c)
    if (frob_q(c, 1) == c) fq_.push_back(c);
}

Residue Field::frob_q(Residue c, std::int64_t n) const {
  return residue_.frobenius(c, n * static_cast<std::int64_t>(cfg_.m));
}

bool Field::compatible(const Field& o) const {
  return cfg_.p == o.cfg_.p && cfg_.m == o.cfg_.m && cfg_.e == o.cfg_.e && cfg_.ram == o.cfg_.ram;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_ << "^" << cfg_.e << "((pi)), theta = -pi^-" << cfg_.ram << ", prec " << cfg_.default_prec;
  return os.str();
}

FieldPtr make_field(const FieldConfig& cfg) { return std::make_shared<const Field>(cfg); }

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && a->compatible(*b));
}

}  // namespace carlitz
