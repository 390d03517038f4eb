#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "carlitz/errors.hpp"
#include "support.hpp"

using namespace carlitz;
using testsupport::field;

TEST_CASE("config validation") {
  FieldConfig c;
  CHECK_NOTHROW(c.validate());
  c.p = 4;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = FieldConfig{};
  c.ram = 3;  // not a multiple of q-1 = 2
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = FieldConfig{};
  c.default_prec = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = FieldConfig{};
  c.p = 2;
  c.m = 2;
  c.ram = 3;
  CHECK(c.q() == 4);
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("modulus is the smallest monic irreducible") {
  CHECK(ResidueField(2, 2).modulus() == std::vector<std::uint32_t>{1, 1});     // x^2+x+1
  CHECK(ResidueField(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0});  // x^3+x+1
  CHECK(ResidueField(3, 2).modulus() == std::vector<std::uint32_t>{1, 0});     // x^2+1
  CHECK(ResidueField(5, 2).modulus() == std::vector<std::uint32_t>{2, 0});     // x^2+2
}

TEST_CASE("residue tables agree with brute-force polynomial arithmetic") {
  const std::pair<std::uint32_t, std::uint32_t> cases[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1},
                                                           {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {7, 1}, {7, 2}};
  for (auto [p, d] : cases) {
    ResidueField F(p, d);
    CAPTURE(p);
    CAPTURE(d);
    for (Residue a = 0; a < F.size(); ++a) {
      auto ca = F.coords(a);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.add(a, F.neg(a)) == 0);
      for (Residue b = 0; b < F.size(); ++b) {
        REQUIRE(F.mul(a, b) == F.mul_reference(a, b));
        auto cb = F.coords(b);
        std::vector<std::uint32_t> cs(d);
        for (std::uint32_t i = 0; i < d; ++i) cs[i] = (ca[i] + cb[i]) % p;
        REQUIRE(F.add(a, b) == F.from_coords(cs));
        REQUIRE(F.frobenius(F.mul(a, b), 1) == F.mul(F.frobenius(a, 1), F.frobenius(b, 1)));
        REQUIRE(F.frobenius(F.add(a, b), 1) == F.add(F.frobenius(a, 1), F.frobenius(b, 1)));
      }
      CHECK(F.frobenius(a, static_cast<std::int64_t>(d)) == a);
      CHECK(F.frobenius(F.frobenius(a, -1), 1) == a);
    }
  }
}

TEST_CASE("F_q inside F_{q^e}") {
  auto f = field(2, 1, 3, 1);
  CHECK(f->fq_elements() == std::vector<Residue>{0, 1});
  auto g = field(3, 1, 2, 2);
  CHECK(g->fq_elements().size() == 3);
  for (Residue c = 0; c < g->residue().size(); ++c) CHECK(g->frob_q(c, 2) == c);
}

TEST_CASE("local arithmetic examples") {
  auto f = field();
  auto th = LocalElement::theta(f);
  auto z = LocalElement::zeta(f);
  auto one = LocalElement::from_int(f, 1);

  CHECK(th * th.inv() == one);
  CHECK((th * th.inv()).is_exact());
  CHECK(z.pow(2) == -th);

  auto x = one - LocalElement::pi(f);
  auto g = x.inv();
  CHECK(g.prec() == 200);
  for (std::int64_t k = 0; k < 200; ++k) CHECK(g.coeff(k) == 1);
  CHECK((g * x).agrees_with(one));

  CHECK_THROWS_AS(LocalElement::zero(f, 10).inv(), DivisionByIndistinguishableZero);
  CHECK_THROWS_AS(one.div(LocalElement::zero(f)), DivisionByIndistinguishableZero);
}

TEST_CASE("precision propagation") {
  auto f = field();
  auto a = LocalElement::monomial(f, 1, -2, 10);
  auto b = LocalElement::monomial(f, 2, 3, 20);
  CHECK((a + b).prec() == 10);
  CHECK((a * b).prec() == std::min(10 + 3, 20 - 2));
  auto ex = LocalElement::monomial(f, 1, 4);
  CHECK((a * ex).prec() == 14);
  CHECK((ex * ex).is_exact());
  // inverse of an inexact element: prec - 2 val
  auto u = LocalElement::from_int(f, 1).truncate(30) + LocalElement::pi(f);
  CHECK(u.inv().prec() == 30);
  auto w = a + LocalElement::monomial(f, 1, 0);
  CHECK(w.inv().prec() == 10 + 4);
}

TEST_CASE("twist examples") {
  auto f = field();
  auto th = LocalElement::theta(f);
  auto z = LocalElement::zeta(f);
  CHECK(th.twist(1) == th.pow(3));
  CHECK(z.twist(1) == -(th * z));
  CHECK_THROWS_AS(th.twist(-1), NotAQthPower);
  auto x = LocalElement::monomial(f, 2, 5, 40);
  CHECK(x.twist(1).prec() == 120);
  CHECK(x.twist(1).twist(-1) == x);
  CHECK(LocalElement::monomial(f, 1, 6, 40).twist(-1).prec() == 14);
}

TEST_CASE("norms") {
  auto f = field();
  auto th = LocalElement::theta(f);
  auto n = th.norm();
  CHECK(n.valuation == -2);
  CHECK(n.log_q == Rational(1));
  CHECK(LocalElement::zeta(f).norm().log_q == Rational(1, 2));
  auto z = LocalElement::zero(f, 7);
  CHECK(z.norm().upper_bound);
  CHECK(z.norm().log_q == Rational(-7, 2));
  CHECK(LocalElement::monomial(f, 1, 2).norm().log_q == Rational(-1));
}

TEST_CASE("ultrametric and multiplicative norms on random elements") {
  std::mt19937_64 rng(11);
  for (auto [p, m, e, ram] : {std::tuple{3u, 1u, 1u, 2}, {2u, 1u, 1u, 1}, {2u, 2u, 1u, 3}, {3u, 1u, 2u, 4}}) {
    auto f = field(p, m, e, ram);
    std::uniform_int_distribution<int> vd(-8, 8);
    for (int it = 0; it < 50; ++it) {
      auto a = testsupport::random_inexact(rng, f, vd(rng), 40);
      auto b = testsupport::random_inexact(rng, f, vd(rng), 40);
      auto na = a.norm().log_q, nb = b.norm().log_q;
      auto s = (a + b);
      if (s.valuation()) {
        CHECK(s.norm().log_q <= std::max(na, nb));
        if (!(na == nb)) CHECK(s.norm().log_q == std::max(na, nb));
      }
      CHECK((a * b).norm().log_q == na + nb);
      CHECK((a * b).agrees_with(b * a));
      auto lhs = (a * b).twist(1);
      auto rhs = a.twist(1) * b.twist(1);
      CHECK(lhs.agrees_with(rhs));
      CHECK((a + b).twist(2).agrees_with(a.twist(2) + b.twist(2)));
      CHECK(a.twist(1).norm().log_q == na * Rational(static_cast<std::int64_t>(f->q())));
      CHECK(a.twist(1).twist(-1) == a);
      CHECK((a / b * b).agrees_with(a));
    }
  }
}
