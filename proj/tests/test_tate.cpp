#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "carlitz/analytics.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/tate_series.hpp"
#include "support.hpp"

using namespace carlitz;
using testsupport::field;

namespace {

TateSeries random_series(std::mt19937_64& rng, const FieldPtr& f, std::int64_t t_deg, std::int64_t prec,
                         std::int64_t vmin) {
  std::uniform_int_distribution<int> vd(0, 6);
  std::vector<LocalElement> c;
  // The constant term sits at vmin so the Gauss norm is realized inside the truncation.
  for (std::int64_t j = 0; j <= t_deg; ++j)
    c.push_back(testsupport::random_inexact(rng, f, vmin + (j == 0 ? 0 : vd(rng)), prec));
  return TateSeries(f, std::move(c), false);
}

bool all_zero_at_prec(const TateSeries& s) { return s.is_zero_at_precision(); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto f = field();
  auto one = LocalElement::from_int(f, 1);
  auto a = TateSeries::polynomial(f, {one, one});
  auto b = TateSeries::polynomial(f, {one, -one});
  auto p = a * b;
  CHECK(p.exact_t());
  CHECK(p.t_deg() == 2);
  CHECK(p.coeff(0) == one);
  CHECK(p.coeff(1).zero_state() == ZeroState::ExactZero);
  CHECK(p.coeff(2) == -one);
  CHECK((a * TateSeries::constant(one)).coeffs() == a.coeffs());
}

TEST_CASE("truncation order of mixed products") {
  auto f = field();
  std::mt19937_64 rng(3);
  auto s = random_series(rng, f, 10, 50, 0);
  auto poly = TateSeries::t_minus(LocalElement::theta(f));
  auto r = poly * s;
  CHECK(!r.exact_t());
  CHECK(r.t_deg() == 10);
  auto s2 = random_series(rng, f, 6, 50, 0);
  CHECK((s + s2).t_deg() == 6);
  CHECK((s * s2).t_deg() == 6);
}

TEST_CASE("twist of t - theta") {
  auto f = field();
  auto th = LocalElement::theta(f);
  auto tw = TateSeries::t_minus(th).twist(1);
  CHECK(tw.coeffs() == TateSeries::t_minus(th.pow(3)).coeffs());
  // F_q[t] is fixed by the inverse twist.
  auto c = TateSeries::polynomial(f, {LocalElement::from_int(f, 2), LocalElement::from_int(f, 1)});
  CHECK(c.twist(-1).coeffs() == c.coeffs());
}

TEST_CASE("unit inversion") {
  auto f = field();
  auto one = LocalElement::from_int(f, 1);
  auto pi = LocalElement::pi(f);
  auto g = TateSeries::polynomial(f, {one, -pi}).invert_unit(20);
  for (std::int64_t j = 0; j <= 20; ++j) CHECK(g.coeff(j) == pi.pow(j));
  CHECK_THROWS_AS(TateSeries::polynomial(f, {LocalElement::zero(f), one}).invert_unit(5), NotAUnit);
  CHECK_THROWS_AS(TateSeries::polynomial(f, {one, one}).invert_unit(5), NotAUnit);

  auto omega = build_omega(f, 30, 120);
  auto inv = omega.invert_unit();
  auto prod = omega * inv;
  CHECK(prod.coeff(0).agrees_with(one));
  for (std::int64_t j = 1; j <= 30; ++j) CHECK(prod.coeff(j).is_zero());
  // 1/Omega = zeta^q prod (1 - t/theta^(q^i))^-1 has coefficient valuations 6j - 3.
  REQUIRE(inv.tail());
  for (std::int64_t j = 0; j <= 10; ++j) {
    CHECK(inv.coeff(j).valuation() == 6 * j - 3);
    CHECK(inv.tail()->vmin(j) <= 6 * j - 3);
  }
}

TEST_CASE("evaluation inside the unit disk") {
  auto f = field();
  auto one = LocalElement::from_int(f, 1);
  auto p = TateSeries::polynomial(f, {one, one});
  CHECK(p.eval(one) == LocalElement::from_int(f, 2));
  std::mt19937_64 rng(5);
  auto s = random_series(rng, f, 8, 40, 0);
  CHECK(s.eval(LocalElement::zero(f)) == s.coeff(0));
  CHECK_THROWS_AS(s.eval(LocalElement::theta(f)), OutsideUnitDisk);
  CHECK_THROWS_AS(s.eval_entire(LocalElement::theta(f)), InsufficientTruncation);

  for (int it = 0; it < 20; ++it) {
    auto a = random_series(rng, f, 8, 40, 0);
    auto b = random_series(rng, f, 8, 40, 0);
    auto x = testsupport::random_exact(rng, f, 0, 5);
    auto poly_a = TateSeries::polynomial(f, a.coeffs());
    auto poly_b = TateSeries::polynomial(f, b.coeffs());
    CHECK((poly_a * poly_b).eval(x).agrees_with(poly_a.eval(x) * poly_b.eval(x)));
  }
}

TEST_CASE("Gauss norm laws on random series") {
  std::mt19937_64 rng(2024);
  for (auto [p, m, ram] : {std::tuple{2u, 1u, 1}, {3u, 1u, 2}, {2u, 2u, 3}}) {
    auto f = field(p, m, 1, ram);
    for (int it = 0; it < 100; ++it) {
      auto a = random_series(rng, f, 6, 60, 0);
      auto b = random_series(rng, f, 6, 60, 0);
      auto na = a.gauss_norm(), nb = b.gauss_norm();
      REQUIRE(!na.upper_bound);
      auto nab = (a * b).gauss_norm();
      CHECK(!nab.upper_bound);
      CHECK(nab.log_q == na.log_q + nb.log_q);
      CHECK(a.twist(1).gauss_norm().log_q == na.log_q * Rational(static_cast<std::int64_t>(f->q())));
      CHECK(all_zero_at_prec((a * b).twist(1) - a.twist(1) * b.twist(1)));
      CHECK(all_zero_at_prec((a + b).twist(1) - (a.twist(1) + b.twist(1))));
    }
  }
}

TEST_CASE("tail certificates") {
  auto t = TailBound::omega(2, 3);
  CHECK(t->vmin(0) == 3);
  CHECK(t->vmin(1) == 9);
  CHECK(t->vmin(3) == 81);
  auto l = TailBound::lalpha(-1, 2, 3);
  CHECK(l->vmin(0) == -1);
  CHECK(l->vmin(1) == 9);
  auto prod = TailBound::product(t, l);
  CHECK(prod->vmin(0) == 2);
  CHECK(prod->vmin(1) == std::min(3 + 9, 9 - 1));
  for (std::int64_t s : {1, 4, 6}) {
    auto c = prod->offset_for_slope(Rational(s));
    REQUIRE(c);
    for (std::int64_t j = 0; j < 30; ++j) CHECK(Rational(prod->vmin(j)) >= *c + Rational(s * j));
  }
  CHECK(!prod->offset_for_slope(Rational(7)));
  // At t = theta (val -2) the Omega tail past degree 10 starts at 3^12 - 22.
  CHECK(t->tail_precision(10, -2, 1000000) == 531441 - 22);
  CHECK(t->tail_precision(10, -2, 500) == 500);
  CHECK(t->tail_precision(10, -6, 500) == 500);
  CHECK(!TailBound::lalpha(-1, 2, 3)->tail_precision(10, -6, 500));
  CHECK_THROWS_AS(TailBound::lalpha(-3, 2, 3), OutsideLogDomain);
}
