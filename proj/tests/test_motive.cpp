#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "carlitz/errors.hpp"
#include "carlitz/motive.hpp"
#include "support.hpp"

using namespace carlitz;
using testsupport::field;

namespace {

constexpr std::int64_t kTDeg = 20;
constexpr std::int64_t kPrec = 120;

TPoly random_tpoly(std::mt19937_64& rng, const FieldPtr& f, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), v(-3, 3), coin(0, 2);
  std::vector<LocalElement> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i)
    c.push_back(coin(rng) == 0 ? LocalElement::zero(f) : testsupport::random_exact(rng, f, v(rng), v(rng) + 2));
  return TPoly(f, c);
}

TPolyMatrix random_matrix(std::mt19937_64& rng, const FieldPtr& f, std::size_t r, std::size_t c, int max_deg) {
  TPolyMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_tpoly(rng, f, max_deg);
  return m;
}

bool psi_agrees(const SeriesMatrix& a, const SeriesMatrix& b) {
  return (a - b).is_zero_at_precision();
}

}  // namespace

TEST_CASE("t-polynomials") {
  auto f = field();
  auto th = LocalElement::theta(f);
  auto p = TPoly::t_minus(th) * TPoly::t_minus(-th);
  CHECK(p.degree() == 2);
  CHECK(p.coeff(1).zero_state() == ZeroState::ExactZero);
  CHECK(p.coeff(0) == -(th * th));
  auto q = p.divide_linear(th);
  REQUIRE(q);
  CHECK(*q == TPoly::t_minus(-th));
  CHECK(!p.divide_linear(th.twist(1)));
  CHECK(TPoly::t_minus(th).twist(1) == TPoly::t_minus(th.twist(1)));
  CHECK(p.eval(th).zero_state() == ZeroState::ExactZero);
  CHECK_THROWS_AS(TPoly::t_minus(LocalElement::zeta(f)).twist(-1), NotAQthPower);
}

TEST_CASE("matrix laws on random small matrices") {
  auto f = field();
  std::mt19937_64 rng(11);
  for (int it = 0; it < 10; ++it) {
    auto a = random_matrix(rng, f, 2, 2, 2), b = random_matrix(rng, f, 2, 2, 1);
    auto c = random_matrix(rng, f, 2, 2, 1), d = random_matrix(rng, f, 2, 2, 2);
    CHECK(a.kron(b) * c.kron(d) == (a * c).kron(b * d));
    auto m = random_matrix(rng, f, 3, 3, 1);
    const TPoly det = m.det();
    CHECK(m * m.adjugate() == TPolyMatrix::identity(f, 3).scale(det));
    CHECK(m.transpose().det() == det);
    CHECK((a * d).det() == a.det() * d.det());
    // det(A (x) B) = det(A)^2 det(B)^2 for 2x2 blocks.
    CHECK(a.kron(b).det() == a.det().pow(2) * b.det().pow(2));
  }
}

TEST_CASE("identity object") {
  auto f = field();
  auto one = make_one(f);
  auto c = check_trivialization(one);
  CHECK(c.pass);
  auto c1 = make_carlitz_power(f, 1, kTDeg, kPrec);
  auto t = tensor_presentation(one, c1);
  CHECK(t.phi().equivalent(c1.phi()));
  CHECK(psi_agrees(t.psi, c1.psi));
  auto d = dual_presentation(one);
  CHECK(d.phi().equivalent(one.phi()));
  CHECK(psi_agrees(d.psi, one.psi));
  auto a = check_anderson_det(one);
  REQUIRE(a);
  CHECK(a->s == 0);
}

TEST_CASE("Carlitz motive powers") {
  auto f = field();
  auto th = LocalElement::theta(f);
  for (std::int64_t n : {1, -1, 2, -2}) {
    CAPTURE(n);
    auto m = make_carlitz_power(f, n, kTDeg, kPrec);
    auto c = check_trivialization(m);
    CHECK(c.pass);
    CHECK(c.certified_prec > 60);
    auto a = check_anderson_det(m);
    REQUIRE(a);
    CHECK(a->s == n);
    CHECK(a->c == LocalElement::from_int(f, 1));
  }
  auto c1 = make_carlitz_power(f, 1, kTDeg, kPrec);
  auto cm1 = make_carlitz_power(f, -1, kTDeg, kPrec);
  auto c2 = make_carlitz_power(f, 2, kTDeg, kPrec);
  auto sq = tensor_presentation(c1, c1);
  CHECK(sq.phi().equivalent(c2.phi()));
  CHECK(psi_agrees(sq.psi, c2.psi));
  auto triv = tensor_presentation(cm1, c1);
  CHECK(triv.phi().equivalent(make_one(f).phi()));
  auto d = dual_presentation(c1);
  CHECK(d.phi().equivalent(cm1.phi()));
  CHECK(check_trivialization(d).pass);
  CHECK(d.phi().den == TPoly::t_minus(th));
}

TEST_CASE("logarithm motive X(zeta)") {
  auto f = field();
  auto z = LocalElement::zeta(f);
  auto x = make_X({z}, kTDeg, kPrec);
  CHECK(x.rank == 2);
  CHECK(check_trivialization(x).pass);
  // zeta = pi^-1 has no cube root here, so Phi itself is not stored.
  CHECK(!x.phi_untwisted);
  CHECK_THROWS_AS(x.phi(), NotAQthPower);
  auto a = check_anderson_det(x);
  REQUIRE(a);
  CHECK(a->s == 1);
  CHECK(a->c == LocalElement::from_int(f, 1));

  auto c1 = make_carlitz_power(f, 1, kTDeg, kPrec);
  CHECK(check_trivialization(tensor_presentation(x, c1)).pass);
  auto d = dual_presentation(x);
  CHECK(check_trivialization(d).pass);
  auto dd = dual_presentation(d);
  CHECK(dd.phi_twisted.equivalent(x.phi_twisted));
  CHECK(psi_agrees(dd.psi, x.psi));

  // Exact determinant law for the tensor product.
  auto tx = tensor_presentation(x, make_carlitz_power(f, 2, kTDeg, kPrec));
  CHECK(tx.phi_twisted.num.det() == x.phi_twisted.num.det().pow(1) * c1.phi_twisted.num.det().pow(4));
}

TEST_CASE("X with Phi available") {
  auto f = field();
  auto th = LocalElement::theta(f);
  auto a1 = th.pow(-3);  // (1/theta)^3
  auto a2 = LocalElement::pi(f).pow(3) + LocalElement::pi(f).pow(6);
  auto x = make_X({a1, a2}, kTDeg, kPrec);
  REQUIRE(x.phi_untwisted);
  CHECK(x.phi().num.at(1, 0) == TPoly::t_minus(th).scale(th.inv()));
  CHECK(x.phi().twist(1).num == x.phi_twisted.num);
  auto a = check_anderson_det(x.phi());
  REQUIRE(a);
  CHECK(a->s == 1);
  CHECK(a->c == LocalElement::from_int(f, 1));
  CHECK(check_trivialization(x).pass);

  // Supplied sigma images are checked against the alphas.
  auto g = field(3, 1, 1, 6, kPrec);
  auto zg = LocalElement::zeta(g);
  auto pi = LocalElement::pi(g);
  auto xg = make_X({zg}, 10, 80, {pi.pow(-1)});
  CHECK(xg.phi_untwisted);
  CHECK_THROWS(make_X({zg}, 10, 80, {pi.pow(-2)}));
  CHECK_THROWS_AS(make_X({th.pow(2)}, 10, 80), OutsideLogDomain);
}

TEST_CASE("Anderson determinant failures") {
  auto f = field();
  auto th = LocalElement::theta(f);
  TPolyMatrix m(f, 2, 2);
  m.at(0, 0) = TPoly::t_minus(th);
  m.at(1, 1) = TPoly::t_minus(LocalElement::from_int(f, -1));
  CHECK(!check_anderson_det(RationalMatrix::from_poly(m)));
  m.at(1, 1) = TPoly::zero(f);
  CHECK(!check_anderson_det(RationalMatrix::from_poly(m)));
  CHECK_THROWS_AS(RationalMatrix::from_poly(m).inverse_transpose(), NonInvertible);
}

TEST_CASE("corrupted trivialization fails") {
  auto f = field();
  auto m = make_carlitz_power(f, 1, kTDeg, kPrec);
  auto coeffs = m.psi.at(0, 0).coeffs();
  coeffs[2] += LocalElement::from_int(f, 1);
  m.psi.at(0, 0) = TateSeries(f, coeffs, false, m.psi.at(0, 0).tail());
  auto c = check_trivialization(m);
  CHECK(!c.pass);
  CHECK(!c.residual.upper_bound);
  CHECK(c.residual.log_q >= Rational(0));
}

TEST_CASE("morphisms") {
  auto f = field();
  auto z = LocalElement::zeta(f);
  auto x = make_X({z}, 10, 80);
  auto c1 = make_carlitz_power(f, 1, 10, 80);
  CHECK(check_morphism(x, x, TPolyMatrix::identity(f, 2)).pass);
  TPolyMatrix emb(f, 1, 2);
  emb.at(0, 0) = TPoly::from_int(f, 1);
  CHECK(check_morphism(c1, x, emb).pass);
  CHECK_THROWS(check_morphism(x, c1, emb));
  std::mt19937_64 rng(5);
  for (int it = 0; it < 5; ++it) {
    // The zero matrix and F_q multiples of the embedding are morphisms; keep
    // a nonconstant entry so the draw is generic.
    auto b = random_matrix(rng, f, 1, 2, 2);
    b.at(0, 1) = b.at(0, 1) + TPoly::t(f).pow(3);
    CHECK(!check_morphism(c1, x, b).pass);
  }
}
