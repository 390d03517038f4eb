#include "carlitz/division.hpp"

#include <algorithm>

#include "carlitz/analytics.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/fq_poly.hpp"

namespace carlitz {

namespace {

using Point = std::pair<std::int64_t, std::int64_t>;

__int128 cross(const Point& o, const Point& a, const Point& b) {
  return static_cast<__int128>(a.first - o.first) * (b.second - o.second) -
         static_cast<__int128>(a.second - o.second) * (b.first - o.first);
}

Rational hull_at(const std::vector<Point>& hull, std::int64_t i) {
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const auto& [a, va] = hull[k];
    const auto& [b, vb] = hull[k + 1];
    if (i >= a && i <= b) return Rational(va) + Rational(vb - va, b - a) * Rational(i - a);
  }
  return Rational(hull.front().second);
}

// Digit-sequence order used to make the root list deterministic.
bool root_before(const LocalElement& a, const LocalElement& b) {
  const auto va = a.valuation(), vb = b.valuation();
  if (!va || !vb) return va.has_value() && !vb.has_value();
  if (*va != *vb) return *va < *vb;
  const ResidueField& rf = a.field()->residue();
  const std::int64_t end = std::max(a.hi(), b.hi());
  for (std::int64_t k = *va; k < end; ++k) {
    const Residue x = a.coeff(k), y = b.coeff(k);
    if (x != y) return rf.coords(x) < rf.coords(y);
  }
  return false;
}

Residue qth_root(const FieldPtr& f, Residue c) {
  const ResidueField& rf = f->residue();
  const std::uint32_t m = f->config().m;
  return rf.frobenius(c, static_cast<std::int64_t>(rf.degree() - m));
}

}  // namespace

NewtonPolygon newton_polygon(const std::vector<LocalElement>& coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1].zero_state() == ZeroState::ExactZero) --n;
  if (n == 0) throw IndeterminateValuation("Newton polygon of the zero polynomial");
  if (coeffs[n - 1].zero_state() != ZeroState::Nonzero)
    throw IndeterminateValuation("leading coefficient is zero at its precision");

  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i)
    if (auto v = coeffs[i].valuation()) pts.emplace_back(static_cast<std::int64_t>(i), *v);

  NewtonPolygon np;
  np.zero_roots = pts.front().first;
  for (std::int64_t i = 0; i < np.zero_roots; ++i)
    if (coeffs[static_cast<std::size_t>(i)].zero_state() == ZeroState::ZeroAtPrecision)
      throw IndeterminateValuation("low-order coefficient is zero at its precision");

  std::vector<Point> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  for (std::size_t i = static_cast<std::size_t>(np.zero_roots); i < n; ++i) {
    if (coeffs[i].zero_state() != ZeroState::ZeroAtPrecision) continue;
    if (Rational(coeffs[i].prec()) <= hull_at(hull, static_cast<std::int64_t>(i)))
      throw IndeterminateValuation("coefficient " + std::to_string(i) + " is zero at a precision that meets the hull");
  }

  np.vertices = hull;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    NewtonSegment s;
    s.start = hull[k].first;
    s.length = hull[k + 1].first - hull[k].first;
    s.slope = Rational(hull[k + 1].second - hull[k].second, s.length);
    for (std::int64_t i = s.start; i <= s.start + s.length; ++i) {
      const LocalElement& c = coeffs[static_cast<std::size_t>(i)];
      const auto v = c.valuation();
      const bool on = v && Rational(*v) == Rational(hull[k].second) + s.slope * Rational(i - s.start);
      s.residual.push_back(on ? c.leading() : 0);
    }
    np.segments.push_back(std::move(s));
  }
  return np;
}

std::vector<Residue> residual_roots(const FieldPtr& f, const std::vector<Residue>& r) {
  const ResidueField& rf = f->residue();
  std::vector<Residue> out;
  for (Residue y = 0; y < rf.size(); ++y) {
    Residue acc = 0;
    for (auto it = r.rbegin(); it != r.rend(); ++it) acc = rf.add(rf.mul(acc, y), *it);
    if (acc == 0) out.push_back(y);
  }
  return out;
}

std::vector<LocalElement> division_points(const LocalElement& beta, std::optional<std::int64_t> prec) {
  const FieldPtr& f = beta.field();
  const std::int64_t P = std::min(beta.prec(), prec.value_or(f->default_prec()));
  const LocalElement b = beta.truncate(P);
  const LocalElement th = LocalElement::theta(f);
  const std::int64_t T = f->log_domain_bound();
  const std::int64_t q = static_cast<std::int64_t>(f->q());
  const ResidueField& rf = f->residue();

  // Peel off leading terms while x^q dominates, settle the balanced digit
  // (c^q - c = d), then Newton x <- x - f(x)/theta, which contracts once
  // val f(x) > T.
  LocalElement x = LocalElement::zero(f);
  for (int iter = 0; iter < 100000; ++iter) {
    const LocalElement r = b - carlitz_t(x);
    if (r.is_zero()) break;
    const std::int64_t vr = *r.valuation();
    if (vr < T) {
      if (vr % q != 0)
        throw ExtensionRequired("slope", "root of valuation " + Rational(vr, q).str() + " is ramified");
      x += LocalElement::monomial(f, qth_root(f, r.leading()), vr / q);
    } else if (vr == T) {
      // Coefficients of y^0, y^1, y^q in c^q - c - d.
      std::vector<Residue> poly(static_cast<std::size_t>(q + 1), 0);
      poly[0] = rf.neg(r.leading());
      poly[1] = rf.neg(1);
      poly[static_cast<std::size_t>(q)] = 1;
      const auto roots = residual_roots(f, poly);
      if (roots.empty()) throw ExtensionRequired("residual", "Artin-Schreier residual has no root in the residue field");
      x += LocalElement::monomial(f, roots.front(), T / q);
    } else {
      x += r.div(th);
    }
  }
  x = x.truncate(sat_add(P, f->ram()));

  std::vector<LocalElement> out;
  const LocalElement z = LocalElement::zeta(f);
  for (Residue c : f->fq_elements()) out.push_back(x + z.scale(c));
  std::sort(out.begin(), out.end(), root_before);
  return out;
}

ReductionResult reduce_log(const LocalElement& beta, std::optional<std::int64_t> prec) {
  const FieldPtr& f = beta.field();
  if (beta.zero_state() != ZeroState::Nonzero) throw IndeterminateValuation("cannot reduce an element that is zero at its precision");
  const std::int64_t T = f->log_domain_bound();
  ReductionResult res;
  res.alpha = beta;
  while (*res.alpha.valuation() <= T) {
    res.alpha = division_points(res.alpha, prec).front();
    ++res.n;
  }
  const FqPoly tn = FqPoly::t(f).pow(static_cast<unsigned>(res.n));
  res.action_residual = carlitz_action(tn, res.alpha) - beta;
  res.exp_residual = carlitz_exp(tn.eval_theta() * carlitz_log(res.alpha, prec), prec) - beta;
  return res;
}

}  // namespace carlitz
