#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "gamma_sharp/approximant.hpp"
#include "gamma_sharp/error.hpp"
#include "gamma_sharp/oracle.hpp"

using namespace gamma_sharp;

TEST_CASE("family names round trip") {
  for (const auto& def : all_approximants()) {
    auto f = parse_approx_family(approx_family_name(def.family));
    REQUIRE(f);
    CHECK(*f == def.family);
  }
  CHECK(!parse_approx_family("nope"));
  CHECK(all_approximants().size() == 17);
}

TEST_CASE("valid domains") {
  CHECK(make_approximant(ApproxFamily::kGosperProduct, 0).valid_domain == 13);
  CHECK(make_approximant(ApproxFamily::kGosperProduct, 2).valid_domain == 6);
  CHECK(make_approximant(ApproxFamily::kGosperProduct, 1).valid_domain == 1);
  CHECK(make_approximant(ApproxFamily::kRamanujanCF, 3).valid_domain == 1);
  CHECK(make_approximant(ApproxFamily::kStirling).valid_domain == 1);
}

TEST_CASE("eval examples") {
  const Interval s = eval_approx(make_approximant(ApproxFamily::kStirling), Rational(10), 128);
  CHECK(s.mid_double() == doctest::Approx(3598695.6187).epsilon(1e-9));
  CHECK(compare(s.hi(), Rational(3628800)) < 0);
  const Interval g = eval_approx(make_approximant(ApproxFamily::kGosperCF, 0), Rational(1), 128);
  CHECK(g.mid_double() == doctest::Approx(1.000421).epsilon(1e-6));
  const Interval r = eval_approx(make_approximant(ApproxFamily::kRamanujanBase), Rational(1), 128);
  CHECK(r.mid_double() == doctest::Approx(1.000283).epsilon(1e-6));
  // independent evaluation of sqrt(pi)/e (13 + 1/30)^(1/6)
  const Interval direct = iv_sqrt(iv_const_pi(160)) / iv_const_e(160) * iv_root6(iv_from_rational(Rational(391, 30), 160));
  CHECK(intersects(r, direct));
  CHECK_THROWS_AS(eval_approx(make_approximant(ApproxFamily::kStirling), Rational(0), 128), Error);
}

TEST_CASE("residual examples") {
  const ResidualSample g = residual(make_approximant(ApproxFamily::kGosper), Rational(1), 128);
  CHECK(g.E.mid_double() == doctest::Approx(0.003987).epsilon(1e-3));
  const ResidualSample s = residual(make_approximant(ApproxFamily::kStirling), Rational(1000000), 128);
  CHECK(std::fabs(s.E.mid_double()) < 1e-7);
  const ResidualSample r = residual(make_approximant(ApproxFamily::kRamanujanBase), Rational(1000), 128);
  CHECK(std::fabs(r.relE.mid_double()) * 1e12 == doctest::Approx(11.0 / 11520).epsilon(0.02));
  CHECK(intersects(r.relE, iv_exp(r.E) - iv_from_int(1, 128)));
}

TEST_CASE("cf_approximant examples") {
  const ApproximantDef g = make_approximant(ApproxFamily::kGosperCF, 3);
  CHECK(cf_approximant(g.constants->levels, 0, Rational(1)) == Rational(5, 484));
  CHECK(cf_approximant({}, 0, Rational(1)) == 0);
  CHECK(cf_approximant(g.constants->levels, -1, Rational(1)) == 0);
  gen::Source src(21);
  for (int i = 0; i < 20; ++i) {
    const Rational x = src.positive(500, 9) + 1;
    for (int k = 0; k <= 3; ++k) CHECK(cf_approximant(g.constants->levels, k, x) == mc_as_rational_function(*g.constants, k)(x));
  }
}

TEST_CASE("pole handling") {
  const ApproximantDef r = make_approximant(ApproxFamily::kRamanujanCF, 0);
  // 1 + x ... denominator x + 79/154 vanishes at -79/154
  CHECK_THROWS_AS(correction_value(r, Rational(-79, 154)), Error);
  for (const auto& def : all_approximants()) CHECK(pole_free_from(def, def.valid_domain));
}

TEST_CASE("monotone improvement in order at x = 100") {
  for (ApproxFamily f : {ApproxFamily::kGosperCF, ApproxFamily::kGosperProduct, ApproxFamily::kRamanujanCF}) {
    double prev = 1;
    for (int k = 0; k <= 3; ++k) {
      const double e = std::fabs(residual(make_approximant(f, k), Rational(100), 256).E.mid_double());
      CHECK(e < prev);
      prev = e;
    }
  }
}

TEST_CASE("bracketing alternation between consecutive depths") {
  for (ApproxFamily f : {ApproxFamily::kGosperCF, ApproxFamily::kGosperProduct, ApproxFamily::kRamanujanCF}) {
    for (long x : {50L, 100L, 500L}) {
      int prev = 0;
      for (int k = 0; k <= 3; ++k) {
        const int s = residual(make_approximant(f, k), Rational(x), 256).E.sign();
        REQUIRE(s != 0);
        if (k > 0) CHECK(s == -prev);
        prev = s;
      }
    }
  }
}

TEST_CASE("width discipline") {
  for (const auto& def : all_approximants()) {
    for (long x : {1L, 100L, 10000L}) {
      if (x < def.valid_domain) continue;
      CHECK(residual(def, Rational(x), 128).E.width_double() < 1e-20);
    }
  }
}

TEST_CASE("difference series of base formulas") {
  const AsymptoticSeries st = difference_series(make_approximant(ApproxFamily::kStirling), 4);
  CHECK(st.leading_order() == 2);
  CHECK(st.coefficient(2) == Rational(1, 12));
  const AsymptoticSeries bu = difference_series(make_approximant(ApproxFamily::kBurnside), 4);
  CHECK(bu.leading_order() == 2);
  CHECK(bu.coefficient(2) == Rational(-1, 24));
}
