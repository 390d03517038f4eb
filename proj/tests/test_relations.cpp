#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "carlitz/analytics.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/relations.hpp"
#include "support.hpp"

using namespace carlitz;
using testsupport::field;

namespace {

SearchBounds bounds(std::int64_t d_t, std::int64_t lo, std::int64_t hi) {
  SearchBounds b;
  b.d_t = d_t;
  b.v_lo = lo;
  b.v_hi = hi;
  b.prec = 120;
  b.t_deg = 20;
  return b;
}

FqPoly fq(const FieldPtr& f, std::vector<Residue> c) { return FqPoly(f, std::move(c)); }

}  // namespace

TEST_CASE("zeta relation") {
  auto f = field();
  auto z = LocalElement::zeta(f);
  auto th = LocalElement::theta(f);
  auto b = bounds(1, -1, 0);
  auto res = search_relations({z}, b);
  REQUIRE(res.relations.size() == 1);
  CHECK(res.kernel_dim == 1);
  const auto& rel = res.relations[0];
  // Normalized with the constant slot leading: 1 - zeta(t - theta) X_0 + t X_1.
  CHECK(rel.slots[0] == TPoly::from_int(f, 1));
  CHECK(rel.slots[1] == -TPoly::t_minus(th).scale(z));
  CHECK(rel.slots[2] == TPoly::t(f));

  auto cert = certify_relation(rel, {z}, b);
  CHECK(cert.certified);
  CHECK(cert.prec == 240);
  CHECK(cert.t_deg == 40);

  auto ev = evaluate_relation_at_theta(rel, {z}, cert, 200);
  CHECK(ev.c_const.zero_state() == ZeroState::ExactZero);
  CHECK(!ev.artifact);
  CHECK(ev.c_pitilde == LocalElement::from_int(f, -1));
  CHECK(ev.c_log[0] == th);
  CHECK(ev.residual.is_zero());

  auto rep = gamma_report({z}, res.relations);
  CHECK(rep.gamma_dim == 1);
  REQUIRE(rep.gamma_polys.size() == 1);
  const auto& g = rep.gamma_polys[0];
  // G = t X_1 - X_0 + 1, F = X_1, b_0 = t + 1.
  CHECK(g.constant == RatFun::from_poly(fq(f, {1})));
  CHECK(g.x0 == RatFun::from_poly(fq(f, {2})));
  CHECK(g.xs[0] == RatFun::from_poly(fq(f, {0, 1})));
  CHECK(g.f_form[0] == RatFun::from_poly(fq(f, {1})));
  CHECK(g.b0 == RatFun::from_poly(fq(f, {1, 1})));
  CHECK(g.f_of_b == RatFun::from_poly(fq(f, {1})));
  CHECK(g.scale == LocalElement::from_int(f, 1));
  // f = -(zeta(t - theta) - 1): the Omega slot minus beta_0.
  CHECK(g.f == -(TPoly::t_minus(th).scale(z) - TPoly::from_int(f, 1)));
}

TEST_CASE("Omega times Upsilon is -1") {
  auto f = field();
  auto z = LocalElement::zeta(f);
  auto th = LocalElement::theta(f);
  auto omega = build_omega(f, 20, 120);
  auto L = build_L_alpha(z, 20, 120);
  auto ups = TateSeries::polynomial(f, {LocalElement::zero(f), LocalElement::from_int(f, 1)}) * L -
             TateSeries::t_minus(th).scale(z);
  CHECK((omega * ups + TateSeries::constant(LocalElement::from_int(f, 1))).is_zero_at_precision());
}

TEST_CASE("no relation for Omega alone") {
  auto f = field();
  auto res = search_relations(f, {}, bounds(2, -2, 2));
  CHECK(res.relations.empty());
  CHECK(res.kernel_dim == 0);
  auto rep = gamma_report({}, res.relations);
  CHECK(rep.gamma_dim == 1);
}

TEST_CASE("module law relation") {
  auto f = field();
  auto th = LocalElement::theta(f);
  auto a = th.inv();
  auto a2 = carlitz_t(a);
  auto b = bounds(2, -2, 2);
  auto res = search_relations({a, a2}, b);
  REQUIRE(res.relations.size() == 1);
  CHECK(res.kernel_dim >= 1);
  auto rel = res.relations[0];
  CAPTURE(rel.to_string());
  auto cert = certify_relation(rel, {a, a2}, b);
  REQUIRE(cert.certified);
  auto ev = evaluate_relation_at_theta(rel, {a, a2}, cert, 200);
  CHECK(!ev.artifact);
  CHECK(ev.residual.is_zero());
  // theta log(a) - log(C_t a) = 0 up to the torsion term, scaled.
  REQUIRE(ev.c_log[1].zero_state() == ZeroState::Nonzero);
  auto ratio = ev.c_log[0] / ev.c_log[1];
  CHECK((ratio + th).is_zero());
  auto rep = gamma_report({a, a2}, res.relations);
  CHECK(rep.gamma_dim == 2);
}

TEST_CASE("certification rejects perturbed relations") {
  auto f = field();
  auto z = LocalElement::zeta(f);
  auto b = bounds(1, -1, 0);
  auto rel = search_relations({z}, b).relations.at(0);
  rel.slots[2] = rel.slots[2] + TPoly::constant(LocalElement::pi(f).pow(5));
  CHECK(!certify_relation(rel, {z}, b).certified);
  auto cert = certify_relation(rel, {z}, b);
  CHECK_THROWS_AS(evaluate_relation_at_theta(rel, {z}, cert, 100), NotCertified);
  RelationVector zero{{TPoly::zero(f), TPoly::zero(f), TPoly::zero(f)}};
  CHECK(!certify_relation(zero, {z}, b).certified);
}

TEST_CASE("bounds and extraction errors") {
  auto f = field();
  auto z = LocalElement::zeta(f);
  auto b = bounds(1, -1, 0);
  b.prec = 3;
  b.t_deg = 0;
  CHECK_THROWS_AS(search_relations({z}, b), UnderdeterminedSystem);
  b = bounds(1, 1, 0);
  CHECK_THROWS_AS(search_relations({z}, b), ConfigError);
  CHECK_THROWS_AS(search_relations({LocalElement::theta(f).pow(2)}, bounds(1, -1, 0)), OutsideLogDomain);
  RelationVector bad{{TPoly::constant(LocalElement::pi(f) + LocalElement::from_int(f, 1)), TPoly::zero(f),
                      TPoly::from_int(f, 1)}};
  CHECK_THROWS_AS(gamma_report({z}, {bad}), GammaExtractionFailed);
}

TEST_CASE("kernel shrinks under refinement") {
  auto f = field();
  auto th = LocalElement::theta(f);
  std::vector<LocalElement> alphas{th, th + LocalElement::from_int(f, 1)};
  auto lo = bounds(2, -2, 2);
  auto hi = lo;
  hi.prec *= 2;
  hi.t_deg *= 2;
  auto a = search_relations(alphas, lo);
  auto b2 = search_relations(alphas, hi);
  CHECK(b2.kernel_dim <= a.kernel_dim);
  CHECK(b2.relations.size() <= a.relations.size());
}
