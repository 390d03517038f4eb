#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "carlitz/analytics.hpp"
#include "carlitz/errors.hpp"
#include "support.hpp"

using namespace carlitz;
using testsupport::field;

namespace {

// Independent pi~ for q = 3, ram = 2: theta*zeta = -pi^-3 and
// 1 - theta^(1-3^i) = 1 - pi^(2(3^i-1)), so pi~ = -pi^-3 prod_i sum_k pi^(2k(3^i-1)).
// Plain int arrays mod 3 over pi^0..pi^(N-1), shifted at the end.
std::vector<int> naive_pitilde_digits(int N) {
  std::vector<int> acc(N, 0);
  acc[0] = 1;
  for (int qi = 3; 2 * (qi - 1) < N; qi *= 3) {
    const int step = 2 * (qi - 1);
    std::vector<int> next(N, 0);
    for (int a = 0; a < N; ++a) {
      if (acc[a] == 0) continue;
      for (int b = a; b < N; b += step) next[b] = (next[b] + acc[a]) % 3;
    }
    acc = next;
  }
  for (auto& x : acc) x = (3 - x) % 3;  // the leading minus sign
  return acc;
}

LocalElement small_z(std::mt19937_64& rng, const FieldPtr& f) {
  std::uniform_int_distribution<int> vd(-2, 4);
  return testsupport::random_exact(rng, f, vd(rng), 8);
}

}  // namespace

TEST_CASE("pi tilde matches the naive product oracle") {
  auto f = field(3, 1, 1, 2, 200);
  auto pt = pi_tilde(f);
  CHECK(pt.valuation() == -3);
  CHECK(pt.prec() == 200);
  auto oracle = naive_pitilde_digits(203);
  for (int k = 0; k < 203; ++k) CHECK(pt.coeff(k - 3) == static_cast<Residue>(oracle[k]));
}

TEST_CASE("pi tilde valuation in other configurations") {
  for (auto [p, m, e, ram] : {std::tuple{2u, 1u, 1u, 1}, {2u, 2u, 1u, 3}, {5u, 1u, 1u, 4}, {3u, 1u, 2u, 4}}) {
    auto f = field(p, m, e, ram, 80);
    const std::int64_t q = static_cast<std::int64_t>(f->q());
    CHECK(pi_tilde(f).valuation() == -ram - ram / (q - 1));
  }
}

TEST_CASE("exp and log basics") {
  auto f = field();
  CHECK(carlitz_exp(LocalElement::zero(f)).zero_state() == ZeroState::ExactZero);
  CHECK(carlitz_log(LocalElement::zero(f)).zero_state() == ZeroState::ExactZero);
  CHECK_THROWS_AS(carlitz_log(LocalElement::monomial(f, 1, -3)), OutsideLogDomain);
  CHECK_NOTHROW(carlitz_log(LocalElement::monomial(f, 1, -2)));

  auto pt = pi_tilde(f);
  auto th = LocalElement::theta(f);
  CHECK((th * carlitz_log(LocalElement::zeta(f)) - pt).is_zero());
  CHECK(carlitz_exp(pt).is_zero());
  CHECK(carlitz_exp(pt).prec() >= 190);
  for (auto a : {FqPoly::t(f), FqPoly(f, {1, 1}), FqPoly(f, {2, 0, 1})})
    CHECK(carlitz_exp(a.eval_theta() * pt).is_zero());
}

TEST_CASE("exp functional equation, additivity and log roundtrip") {
  auto f = field();
  auto th = LocalElement::theta(f);
  std::mt19937_64 rng(77);
  for (int it = 0; it < 20; ++it) {
    auto z = small_z(rng, f);
    auto y = small_z(rng, f);
    auto ez = carlitz_exp(z);
    CHECK(carlitz_exp(th * z).agrees_with(th * ez + ez.twist(1)));
    CHECK(carlitz_exp(z + y).agrees_with(ez + carlitz_exp(y)));
    CHECK(carlitz_log(ez).agrees_with(z));
    CHECK(carlitz_exp(carlitz_log(z)).agrees_with(z));
    if (z.valuation() && *z.valuation() >= 1)
      CHECK((th * carlitz_log(z)).agrees_with(carlitz_log(th * z) + carlitz_log(z.twist(1))));
  }
}

TEST_CASE("exp intertwines multiplication by a(theta) with the Carlitz action") {
  auto f = field();
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(0, 2);
  for (int it = 0; it < 15; ++it) {
    FqPoly a(f, {static_cast<Residue>(c(rng)), static_cast<Residue>(c(rng)), static_cast<Residue>(c(rng))});
    auto z = small_z(rng, f);
    CHECK(carlitz_exp(a.eval_theta() * z).agrees_with(carlitz_action(a, carlitz_exp(z))));
  }
}

TEST_CASE("Carlitz action") {
  auto f = field();
  auto z = LocalElement::zeta(f);
  CHECK(carlitz_action(FqPoly::t(f), z).zero_state() == ZeroState::ExactZero);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(0, 2);
  for (int it = 0; it < 10; ++it) {
    FqPoly a(f, {static_cast<Residue>(c(rng)), static_cast<Residue>(c(rng))});
    FqPoly b(f, {static_cast<Residue>(c(rng)), static_cast<Residue>(c(rng)), static_cast<Residue>(c(rng))});
    auto x = testsupport::random_exact(rng, f, -3, 3);
    CHECK(carlitz_action(a * b, x) == carlitz_action(a, carlitz_action(b, x)));
  }
}

TEST_CASE("Omega") {
  auto f = field();
  auto th = LocalElement::theta(f);
  auto omega = build_omega(f, 40, 200);
  CHECK(omega.coeff(0) == LocalElement::zeta(f).pow(-3).truncate(200));
  CHECK(omega.coeff(1).valuation() == 9);
  CHECK(omega.coeff(2).valuation() == 27);
  auto resid = omega - TateSeries::t_minus(th.twist(1)) * omega.twist(1, 200);
  CHECK(resid.is_zero_at_precision());
  auto at_q = omega.eval_entire(th.twist(1));
  CHECK(at_q.is_zero());
  auto val = omega.eval_entire(th);
  CHECK((pi_tilde(f) * val + LocalElement::from_int(f, 1)).is_zero());
  CHECK(val.prec() > 150);
  CHECK_THROWS_AS(omega.eval_entire(th, 100000), InsufficientTruncation);
}

TEST_CASE("L_alpha") {
  auto f = field();
  auto th = LocalElement::theta(f);
  const LocalElement alphas[] = {LocalElement::zeta(f), th.inv(), th, th + LocalElement::from_int(f, 1)};
  for (const auto& a : alphas) {
    CAPTURE(a.to_string());
    auto L = build_L_alpha(a, 40, 200);
    auto tq = TateSeries::t_minus(th.twist(1));
    auto resid = tq * L - tq.scale(a) - L.twist(1, 200);
    CHECK(resid.is_zero_at_precision());
    auto v = L.eval_entire(th);
    CHECK((v - carlitz_log(a)).is_zero());
    CHECK(v.prec() > 100);
  }
  CHECK(build_L_alpha(LocalElement::zero(f), 10).is_zero_at_precision());
  CHECK_THROWS_AS(build_L_alpha(th.pow(2), 10), OutsideLogDomain);
}
