#include "carlitz/tpoly.hpp"

#include <sstream>

#include "carlitz/errors.hpp"

namespace carlitz {

TPoly::TPoly(FieldPtr f, std::vector<LocalElement> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!c.is_exact()) throw Error("t-polynomial coefficients must be exact");
  trim();
}

void TPoly::trim() {
  while (!c_.empty() && c_.back().zero_state() == ZeroState::ExactZero) c_.pop_back();
}

TPoly TPoly::t(const FieldPtr& f) { return TPoly(f, {LocalElement::zero(f), LocalElement::from_int(f, 1)}); }

TPoly TPoly::t_minus(const LocalElement& c) {
  return TPoly(c.field(), {-c, LocalElement::from_int(c.field(), 1)});
}

LocalElement TPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : LocalElement::zero(field_); }

TPoly operator+(const TPoly& a, const TPoly& b) {
  std::vector<LocalElement> c(std::max(a.c_.size(), b.c_.size()), LocalElement::zero(a.field_));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return TPoly(a.field_, std::move(c));
}

TPoly TPoly::operator-() const {
  std::vector<LocalElement> c;
  for (const auto& x : c_) c.push_back(-x);
  return TPoly(field_, std::move(c));
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return TPoly::zero(a.field_);
  std::vector<LocalElement> c(a.c_.size() + b.c_.size() - 1, LocalElement::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return TPoly(a.field_, std::move(c));
}

TPoly TPoly::scale(const LocalElement& s) const {
  std::vector<LocalElement> c;
  for (const auto& x : c_) c.push_back(x * s);
  return TPoly(field_, std::move(c));
}

TPoly TPoly::pow(unsigned k) const {
  TPoly r = from_int(field_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

TPoly TPoly::twist(std::int64_t n) const {
  std::vector<LocalElement> c;
  for (const auto& x : c_) c.push_back(x.twist(n));
  return TPoly(field_, std::move(c));
}

std::optional<TPoly> TPoly::divide_linear(const LocalElement& root) const {
  if (c_.empty()) return *this;
  // Synthetic division, top coefficient down.
  std::vector<LocalElement> q(c_.size() - 1, LocalElement::zero(field_));
  LocalElement carry = LocalElement::zero(field_);
  for (std::size_t k = c_.size(); k-- > 0;) {
    LocalElement v = c_[k] + carry * root;
    if (k == 0) {
      if (v.zero_state() != ZeroState::ExactZero) return std::nullopt;
    } else {
      q[k - 1] = v;
    }
    carry = v;
  }
  return TPoly(field_, std::move(q));
}

LocalElement TPoly::eval(const LocalElement& x) const {
  LocalElement acc = LocalElement::zero(field_);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

std::string TPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].zero_state() == ZeroState::ExactZero) continue;
    if (!first) os << " + ";
    first = false;
    const std::string c = c_[k].to_string();
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != "1") os << "(" << c << ")*";
    os << "t";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

TPolyMatrix::TPolyMatrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, TPoly::zero(field_)) {}

TPolyMatrix TPolyMatrix::identity(const FieldPtr& f, std::size_t n) {
  TPolyMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = TPoly::from_int(f, 1);
  return m;
}

TPolyMatrix operator*(const TPolyMatrix& a, const TPolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
  TPolyMatrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k) r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
  return r;
}

TPolyMatrix operator-(const TPolyMatrix& a, const TPolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix dimension mismatch");
  TPolyMatrix r = a;
  for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
  return r;
}

TPolyMatrix TPolyMatrix::scale(const TPoly& s) const {
  TPolyMatrix r = *this;
  for (auto& x : r.e_) x = x * s;
  return r;
}

TPolyMatrix TPolyMatrix::transpose() const {
  TPolyMatrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

TPolyMatrix TPolyMatrix::twist(std::int64_t n) const {
  TPolyMatrix r = *this;
  for (auto& x : r.e_) x = x.twist(n);
  return r;
}

TPolyMatrix TPolyMatrix::kron(const TPolyMatrix& b) const {
  TPolyMatrix r(field_, rows_ * b.rows_, cols_ * b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l) r.at(i * b.rows_ + k, j * b.cols_ + l) = at(i, j) * b.at(k, l);
  return r;
}

namespace {

// Cofactor expansion over the rows in `rows` and columns in `cols`.
TPoly minor_det(const TPolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const FieldPtr& f = m.field();
  if (rows.empty()) return TPoly::from_int(f, 1);
  TPoly acc = TPoly::zero(f);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const TPoly& e = m.at(rows[0], cols[k]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t l = 0; l < cols.size(); ++l)
      if (l != k) sub_cols.push_back(cols[l]);
    TPoly term = e * minor_det(m, sub_rows, sub_cols);
    acc = k % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

std::vector<std::size_t> range_without(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) v.push_back(i);
  return v;
}

}  // namespace

TPoly TPolyMatrix::det() const {
  if (rows_ != cols_) throw Error("determinant of a non-square matrix");
  return minor_det(*this, range_without(rows_, rows_), range_without(cols_, cols_));
}

TPolyMatrix TPolyMatrix::adjugate() const {
  if (rows_ != cols_) throw Error("adjugate of a non-square matrix");
  TPolyMatrix r(field_, rows_, cols_);
  if (rows_ == 1) {
    r.at(0, 0) = TPoly::from_int(field_, 1);
    return r;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      TPoly m = minor_det(*this, range_without(rows_, i), range_without(cols_, j));
      r.at(j, i) = (i + j) % 2 == 0 ? m : -m;
    }
  return r;
}

bool TPolyMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const TPolyMatrix& a, const TPolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

RationalMatrix RationalMatrix::from_poly(TPolyMatrix m) {
  TPoly one = TPoly::from_int(m.field(), 1);
  return {std::move(m), one};
}

RationalMatrix RationalMatrix::inverse_transpose() const {
  TPoly d = num.det();
  if (d.is_zero()) throw NonInvertible("matrix is singular over k(t)");
  return {num.adjugate().transpose().scale(den), d};
}

bool RationalMatrix::equivalent(const RationalMatrix& b) const {
  if (num.rows() != b.num.rows() || num.cols() != b.num.cols()) return false;
  return num.scale(b.den) == b.num.scale(den);
}

}  // namespace carlitz
