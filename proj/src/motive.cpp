#include "carlitz/motive.hpp"

#include <algorithm>

#include "carlitz/analytics.hpp"
#include "carlitz/errors.hpp"

namespace carlitz {

SeriesMatrix::SeriesMatrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, TateSeries::zero(field_)) {}

SeriesMatrix SeriesMatrix::from_poly(const TPolyMatrix& m) {
  SeriesMatrix r(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).to_series();
  return r;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
  SeriesMatrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const TateSeries& x = a.at(i, k);
        const TateSeries& y = b.at(k, j);
        if ((x.exact_t() && x.coeffs().empty()) || (y.exact_t() && y.coeffs().empty())) continue;
        r.at(i, j) = r.at(i, j) + x * y;
      }
  return r;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix dimension mismatch");
  SeriesMatrix r = a;
  for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
  return r;
}

SeriesMatrix SeriesMatrix::scale(const TateSeries& s) const {
  SeriesMatrix r = *this;
  for (auto& x : r.e_) x = x * s;
  return r;
}

SeriesMatrix SeriesMatrix::transpose() const {
  SeriesMatrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

SeriesMatrix SeriesMatrix::twist(std::int64_t n, std::optional<std::int64_t> cap) const {
  SeriesMatrix r = *this;
  for (auto& x : r.e_) x = x.twist(n, cap);
  return r;
}

SeriesMatrix SeriesMatrix::kron(const SeriesMatrix& b) const {
  SeriesMatrix r(field_, rows_ * b.rows_, cols_ * b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l) r.at(i * b.rows_ + k, j * b.cols_ + l) = at(i, j) * b.at(k, l);
  return r;
}

namespace {

bool is_zero_poly(const TateSeries& s) { return s.exact_t() && s.coeffs().empty(); }

TateSeries minor_det(const SeriesMatrix& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  const FieldPtr& f = m.field();
  if (rows.empty()) return TateSeries::constant(LocalElement::from_int(f, 1));
  TateSeries acc = TateSeries::zero(f);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const TateSeries& e = m.at(rows[0], cols[k]);
    if (is_zero_poly(e)) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t l = 0; l < cols.size(); ++l)
      if (l != k) sub_cols.push_back(cols[l]);
    TateSeries term = e * minor_det(m, sub_rows, sub_cols);
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

LocalElement one(const FieldPtr& f) { return LocalElement::from_int(f, 1); }

}  // namespace

TateSeries SeriesMatrix::det() const {
  if (rows_ != cols_) throw Error("determinant of a non-square matrix");
  return minor_det(*this, range_without(rows_, rows_), range_without(cols_, cols_));
}

SeriesMatrix SeriesMatrix::inverse(std::int64_t t_deg) const {
  if (rows_ != cols_) throw Error("inverse of a non-square matrix");
  const TateSeries d = det();
  TateSeries dinv;
  // An exact monomial constant inverts exactly; everything else as a unit series.
  if (d.exact_t() && d.coeffs().size() == 1 && d.coeffs()[0].is_monomial())
    dinv = TateSeries::constant(d.coeffs()[0].inv());
  else
    dinv = d.exact_t() ? d.invert_unit(t_deg) : d.invert_unit();
  SeriesMatrix adj(field_, rows_, cols_);
  if (rows_ == 1) {
    adj.at(0, 0) = TateSeries::constant(one(field_));
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        TateSeries m = minor_det(*this, range_without(rows_, i), range_without(cols_, j));
        adj.at(j, i) = (i + j) % 2 == 0 ? m : -m;
      }
  }
  return adj.scale(dinv);
}

std::optional<std::int64_t> SeriesMatrix::min_prec() const {
  std::optional<std::int64_t> r;
  for (const auto& x : e_) {
    const std::int64_t p = x.min_prec();
    if (is_exact_prec(p)) continue;
    r = r ? std::min(*r, p) : p;
  }
  return r;
}

std::int64_t SeriesMatrix::max_t_deg() const {
  std::int64_t r = 0;
  for (const auto& x : e_)
    if (!x.exact_t()) r = std::max(r, x.t_deg());
  return r;
}

bool SeriesMatrix::is_zero_at_precision() const {
  return std::all_of(e_.begin(), e_.end(), [](const TateSeries& s) { return s.is_zero_at_precision(); });
}

NormInfo SeriesMatrix::gauss_norm() const {
  std::optional<NormInfo> known, bound;
  for (const auto& x : e_) {
    NormInfo n = x.gauss_norm();
    auto& slot = n.upper_bound ? bound : known;
    if (!slot || n.log_q > slot->log_q) slot = n;
  }
  if (known && (!bound || known->log_q >= bound->log_q)) return *known;
  if (bound) return *bound;
  NormInfo z;
  z.upper_bound = true;
  z.log_q = Rational(-kExact / 1024);
  return z;
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::One: return "ONE";
    case Provenance::CarlitzN: return "CARLITZ_N";
    case Provenance::XAlphas: return "X_ALPHAS";
    case Provenance::Tensor: return "TENSOR";
    case Provenance::Dual: return "DUAL";
  }
  return "?";
}

const RationalMatrix& MotivePresentation::phi() const {
  if (!phi_untwisted)
    throw NotAQthPower("Phi of " + name +
                       " needs q-th roots outside the working field; supply alpha^(-1) explicitly");
  return *phi_untwisted;
}

MotivePresentation make_one(const FieldPtr& f) {
  MotivePresentation m;
  m.name = "1";
  m.rank = 1;
  m.phi_twisted = RationalMatrix::from_poly(TPolyMatrix::identity(f, 1));
  m.phi_untwisted = m.phi_twisted;
  m.psi = SeriesMatrix::from_poly(TPolyMatrix::identity(f, 1));
  m.provenance = Provenance::One;
  return m;
}

MotivePresentation make_carlitz_power(const FieldPtr& f, std::int64_t n, std::int64_t t_deg,
                                      std::optional<std::int64_t> prec) {
  const LocalElement th = LocalElement::theta(f);
  const unsigned k = static_cast<unsigned>(n < 0 ? -n : n);
  TPolyMatrix num(f, 1, 1);
  TPoly den = TPoly::from_int(f, 1);
  if (n >= 0) {
    num.at(0, 0) = TPoly::t_minus(th).pow(k);
  } else {
    num.at(0, 0) = TPoly::from_int(f, 1);
    den = TPoly::t_minus(th).pow(k);
  }
  const TateSeries omega = build_omega(f, t_deg, prec);
  const TateSeries base = n >= 0 ? omega : omega.invert_unit();
  TateSeries psi = TateSeries::constant(one(f));
  for (unsigned i = 0; i < k; ++i) psi = psi * base;

  MotivePresentation m;
  m.name = "C(" + std::to_string(n) + ")";
  m.rank = 1;
  m.phi_untwisted = RationalMatrix{num, den};
  m.phi_twisted = m.phi_untwisted->twist(1);
  m.psi = SeriesMatrix(f, 1, 1);
  m.psi.at(0, 0) = psi;
  m.provenance = Provenance::CarlitzN;
  return m;
}

MotivePresentation make_X(const std::vector<LocalElement>& alphas, std::int64_t t_deg,
                          std::optional<std::int64_t> prec, const std::vector<LocalElement>& sigma_alphas) {
  if (alphas.empty()) throw Error("X needs at least one alpha");
  const FieldPtr& f = alphas.front().field();
  if (!sigma_alphas.empty() && sigma_alphas.size() != alphas.size())
    throw Error("sigma images must match the alphas one for one");
  for (const auto& a : alphas) {
    if (!a.is_exact()) throw Error("alphas must be exact");
    if (a.zero_state() != ZeroState::ExactZero && a.valuation_lower_bound() <= f->log_domain_bound())
      throw OutsideLogDomain();
  }
  const std::size_t r = alphas.size();
  const LocalElement th = LocalElement::theta(f);
  const TPoly lin = TPoly::t_minus(th);
  const TPoly lin1 = TPoly::t_minus(th.twist(1));

  // alpha^(-1) when available, so Phi itself can be stored.
  std::optional<std::vector<LocalElement>> sig;
  if (!sigma_alphas.empty()) {
    for (std::size_t i = 0; i < r; ++i)
      if (!(sigma_alphas[i].twist(1) == alphas[i]))
        throw Error("supplied sigma image " + std::to_string(i) + " does not twist back to its alpha");
    sig = sigma_alphas;
  } else {
    try {
      std::vector<LocalElement> s;
      for (const auto& a : alphas) s.push_back(a.twist(-1));
      sig = s;
    } catch (const NotAQthPower&) {
    }
  }

  TPolyMatrix phi1 = TPolyMatrix::identity(f, r + 1);
  phi1.at(0, 0) = lin1;
  for (std::size_t i = 0; i < r; ++i) phi1.at(i + 1, 0) = lin1.scale(alphas[i]);

  const TateSeries omega = build_omega(f, t_deg, prec);
  SeriesMatrix psi = SeriesMatrix::from_poly(TPolyMatrix::identity(f, r + 1));
  psi.at(0, 0) = omega;
  std::string name = "X(";
  for (std::size_t i = 0; i < r; ++i) {
    psi.at(i + 1, 0) = omega * build_L_alpha(alphas[i], t_deg, prec);
    name += (i ? ", " : "") + alphas[i].to_string();
  }

  MotivePresentation m;
  m.name = name + ")";
  m.rank = r + 1;
  m.phi_twisted = RationalMatrix::from_poly(phi1);
  if (sig) {
    TPolyMatrix phi = TPolyMatrix::identity(f, r + 1);
    phi.at(0, 0) = lin;
    for (std::size_t i = 0; i < r; ++i) phi.at(i + 1, 0) = lin.scale((*sig)[i]);
    m.phi_untwisted = RationalMatrix::from_poly(phi);
  }
  m.psi = psi;
  m.provenance = Provenance::XAlphas;
  return m;
}

MotivePresentation tensor_presentation(const MotivePresentation& p, const MotivePresentation& q) {
  if (!same_field(p.psi.field(), q.psi.field())) throw ConfigError("tensor of presentations over different fields");
  MotivePresentation m;
  m.name = p.name + " (x) " + q.name;
  m.rank = p.rank * q.rank;
  m.phi_twisted = p.phi_twisted.kron(q.phi_twisted);
  if (p.phi_untwisted && q.phi_untwisted) m.phi_untwisted = p.phi_untwisted->kron(*q.phi_untwisted);
  m.psi = p.psi.kron(q.psi);
  m.provenance = Provenance::Tensor;
  return m;
}

MotivePresentation dual_presentation(const MotivePresentation& p) {
  MotivePresentation m;
  m.name = "dual(" + p.name + ")";
  m.rank = p.rank;
  m.phi_twisted = p.phi_twisted.inverse_transpose();
  if (p.phi_untwisted) m.phi_untwisted = p.phi_untwisted->inverse_transpose();
  m.psi = p.psi.inverse(std::max<std::int64_t>(p.psi.max_t_deg(), 0)).transpose();
  m.provenance = Provenance::Dual;
  return m;
}

TrivializationCheck check_trivialization(const MotivePresentation& p) {
  const SeriesMatrix psi1 = p.psi.twist(1, p.psi.min_prec());
  const SeriesMatrix lhs = p.psi.scale(p.phi_twisted.den.to_series());
  const SeriesMatrix rhs = SeriesMatrix::from_poly(p.phi_twisted.num) * psi1;
  const SeriesMatrix res = lhs - rhs;
  TrivializationCheck c;
  c.residual = res.gauss_norm();
  c.certified_prec = res.min_prec().value_or(kExact);
  c.pass = res.is_zero_at_precision();
  return c;
}

MorphismCheck check_morphism(const MotivePresentation& p, const MotivePresentation& q, const TPolyMatrix& b) {
  if (b.rows() != p.rank || b.cols() != q.rank) throw Error("morphism matrix has the wrong shape");
  const RationalMatrix& fp = p.phi_twisted;
  const RationalMatrix& fq = q.phi_twisted;
  MorphismCheck c;
  c.residual = (b * fq.num).scale(fp.den) - (fp.num * b.twist(1)).scale(fq.den);
  c.pass = c.residual.is_zero();
  return c;
}

namespace {

// d = c (t - root)^s with c exact, s >= 0.
std::optional<std::pair<LocalElement, std::int64_t>> split_power(TPoly d, const LocalElement& root) {
  if (d.is_zero()) return std::nullopt;
  std::int64_t s = 0;
  while (d.degree() > 0) {
    auto q = d.divide_linear(root);
    if (!q) return std::nullopt;
    d = *q;
    ++s;
  }
  return std::make_pair(d.coeff(0), s);
}

std::optional<AndersonDet> anderson_det_at(const RationalMatrix& phi, const LocalElement& root) {
  auto top = split_power(phi.num.det(), root);
  auto bottom = split_power(phi.den.pow(static_cast<unsigned>(phi.num.rows())), root);
  if (!top || !bottom) return std::nullopt;
  if (!bottom->first.is_monomial()) return std::nullopt;
  AndersonDet a;
  a.c = top->first * bottom->first.inv();
  a.s = top->second - bottom->second;
  if (!a.c.is_exact() || a.c.zero_state() != ZeroState::Nonzero) return std::nullopt;
  return a;
}

}  // namespace

std::optional<AndersonDet> check_anderson_det(const RationalMatrix& phi) {
  return anderson_det_at(phi, LocalElement::theta(phi.num.field()));
}

std::optional<AndersonDet> check_anderson_det(const MotivePresentation& p) {
  if (p.phi_untwisted) return check_anderson_det(*p.phi_untwisted);
  // det Phi^(1) = c^(1) (t - theta^q)^s, and twisting is injective.
  const FieldPtr& f = p.phi_twisted.num.field();
  auto a = anderson_det_at(p.phi_twisted, LocalElement::theta(f).twist(1));
  if (!a) return std::nullopt;
  try {
    a->c = a->c.twist(-1);
  } catch (const NotAQthPower&) {
    return std::nullopt;
  }
  return a;
}

}  // namespace carlitz
