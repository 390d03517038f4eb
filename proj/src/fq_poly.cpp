#include "carlitz/fq_poly.hpp"

#include <sstream>

#include "carlitz/errors.hpp"

namespace carlitz {

FqPoly::FqPoly(FieldPtr f, std::vector<Residue> c) : field_(std::move(f)), c_(std::move(c)) {
  for (auto x : c_)
    if (!field_->in_fq(x)) throw Error("coefficient " + std::to_string(x) + " is not in F_q");
  trim();
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
  const FieldPtr& f = a.field_ ? a.field_ : b.field_;
  std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
  const auto& R = f->residue();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = R.add(a.coeff(i), b.coeff(i));
  return FqPoly(f, std::move(c));
}

FqPoly FqPoly::operator-() const {
  FqPoly r = *this;
  for (auto& x : r.c_) x = field_->residue().neg(x);
  return r;
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) { return a + (-b); }

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  const FieldPtr& f = a.field_ ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return FqPoly(f, {});
  const auto& R = f->residue();
  std::vector<Residue> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = R.add(c[i + j], R.mul(a.c_[i], b.c_[j]));
  return FqPoly(f, std::move(c));
}

FqPoly FqPoly::scale(Residue s) const {
  FqPoly r = *this;
  for (auto& x : r.c_) x = field_->residue().mul(x, s);
  r.trim();
  return r;
}

FqPoly FqPoly::pow(unsigned k) const {
  FqPoly r = constant(field_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  const auto& R = field_->residue();
  std::vector<Residue> rem = c_;
  std::vector<Residue> quo(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, 0);
  const Residue li = R.inv(d.leading());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Residue coef = R.mul(rem[k + d.c_.size() - 1], li);
    quo[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] = R.sub(rem[k + j], R.mul(coef, d.c_[j]));
  }
  return {FqPoly(field_, std::move(quo)), FqPoly(field_, std::move(rem))};
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return scale(field_->residue().inv(leading()));
}

LocalElement FqPoly::eval(const LocalElement& x) const {
  LocalElement acc = LocalElement::zero(field_);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + LocalElement::constant(field_, c_[k]);
  return acc;
}

LocalElement FqPoly::eval_theta() const { return eval(LocalElement::theta(field_)); }

std::string FqPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || c_[k] != 1) os << c_[k];
    if (k > 0) {
      if (c_[k] != 1) os << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

FqPoly gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatFun::RatFun(FqPoly n, FqPoly d) {
  if (d.is_zero()) throw Error("rational function with zero denominator");
  FqPoly g = gcd(n, d);
  if (!n.is_zero()) {
    n = n.divmod(g).first;
    d = d.divmod(g).first;
  } else {
    d = FqPoly::constant(d.field(), 1);
  }
  const Residue li = d.field()->residue().inv(d.leading());
  num = n.scale(li);
  den = d.scale(li);
}

std::string RatFun::to_string() const {
  if (den.degree() == 0) return num.to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

LocalElement carlitz_action(const FqPoly& a, const LocalElement& x) {
  const FieldPtr& f = x.field();
  const LocalElement th = LocalElement::theta(f);
  LocalElement y = LocalElement::zero(f);
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    y = th * y + y.twist(1);
    const Residue c = a.coeffs()[k];
    if (c != 0) y += x.scale(c);
  }
  return y;
}

}  // namespace carlitz
