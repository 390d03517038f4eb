#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "carlitz/analytics.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/json_io.hpp"
#include "support.hpp"

using namespace carlitz;
using testsupport::field;

TEST_CASE("element encoding") {
  auto f = field(3, 1, 2, 2, 50);
  auto x = LocalElement::from_terms(f, {{-2, 1}, {0, 5}});
  auto j = to_json(x);
  CHECK(j.dump() ==
        R"({"p":3,"m":1,"e":2,"ram":2,"prec":null,"coeffs":[[-2,[1,0]],[0,[2,1]]]})");
  CHECK(element_from_json(j, f) == x);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto y = testsupport::random_inexact(rng, f, -5 + i % 7, 20 + i);
    CHECK(element_from_json(Json::parse(to_json(y).dump()), f) == y);
  }
  CHECK_THROWS_AS(element_from_json(j, field()), ConfigError);
  j["coeffs"] = Json::parse("[[0,[1,0]],[-1,[1,0]]]");
  CHECK_THROWS_AS(element_from_json(j, f), ConfigError);
  j["coeffs"] = Json::parse("[[0,[3,0]]]");
  CHECK_THROWS_AS(element_from_json(j, f), ConfigError);
}

TEST_CASE("series and tails") {
  auto f = field(3, 1, 1, 2, 60);
  auto om = build_omega(f, 8, 60);
  auto l = build_L_alpha(LocalElement::zeta(f), 8, 60);
  for (const auto& s : {om, l, om * l, om.twist(1), TateSeries::polynomial(f, {LocalElement::theta(f)})}) {
    auto back = series_from_json(Json::parse(to_json(s).dump()), f);
    CHECK(back.coeffs() == s.coeffs());
    CHECK(back.exact_t() == s.exact_t());
    CHECK(back.tail()->window(30) == s.tail()->window(30));
    CHECK(to_json(back) == to_json(s));
  }
  CHECK(to_json(om)["tail"].dump() == R"({"kind":"OMEGA","ram":2,"q":3})");
  CHECK_THROWS_AS(tail_from_json(Json::parse(R"({"kind":"NOPE"})")), ConfigError);
}

TEST_CASE("presentations") {
  auto f = field(3, 1, 1, 2, 60);
  for (const auto& p : {make_carlitz_power(f, 1, 6, 60), make_X({LocalElement::zeta(f)}, 6, 60),
                        make_X({LocalElement::theta(f).pow(-3)}, 6, 60)}) {
    auto back = presentation_from_json(Json::parse(to_json(p).dump()), f);
    CHECK(back.rank == p.rank);
    CHECK(back.phi_twisted.equivalent(p.phi_twisted));
    CHECK(back.phi_untwisted.has_value() == p.phi_untwisted.has_value());
    CHECK(check_trivialization(back).pass);
    CHECK(to_json(back) == to_json(p));
  }
  // A file giving only Phi gets Phi^(1) by twisting.
  auto c1 = to_json(make_carlitz_power(f, 1, 6, 60));
  c1.erase("phi_twisted");
  c1.erase("phi_twisted_den");
  auto back = presentation_from_json(c1, f);
  CHECK(back.phi_twisted.num.at(0, 0) == TPoly::t_minus(LocalElement::theta(f).twist(1)));
}

TEST_CASE("ratfun encoding") {
  auto f = field();
  RatFun r(FqPoly(f, {1, 1}), FqPoly(f, {1, 0, 1}));
  CHECK(to_json(r).dump() == "[[[1],[1]],[[1],[0],[1]]]");
}
