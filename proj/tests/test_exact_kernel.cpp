#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "gamma_sharp/error.hpp"
#include "gamma_sharp/interval.hpp"
#include "gamma_sharp/rational_function.hpp"
#include "gamma_sharp/series.hpp"

using namespace gamma_sharp;

namespace {

Rational q(const char* s) { return parse_rational(s); }
Polynomial x() { return Polynomial::identity(); }
Polynomial c(const Rational& v) { return Polynomial::constant(v); }

// ln(1+u) = sum (-1)^(j+1) u^j / j, expanded term by term for u = a/x.
Rational mercator_coefficient(const Rational& a, int m) {
  return (m % 2 ? Rational(1) : Rational(-1)) * pow(a, static_cast<unsigned>(m)) / m;
}

}  // namespace

TEST_CASE("rationals normalize and parse") {
  CHECK(q("6/8") == Rational(3, 4));
  CHECK(q("-6/-8") == Rational(3, 4));
  CHECK(q("0.125") == Rational(1, 8));
  CHECK(q("1e3") == 1000);
  CHECK(q("-2.5e-1") == Rational(-1, 4));
  CHECK(to_string(q("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("rational arithmetic satisfies the cross-multiplication identity") {
  gen::Source g(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = g.rational(), b = g.positive();
    const Rational s = a + b;
    CHECK(s.get_num() * a.get_den() * b.get_den() ==
          s.get_den() * (a.get_num() * b.get_den() + b.get_num() * a.get_den()));
    CHECK(gcd(s.get_num(), s.get_den()) == 1);
    CHECK(s.get_den() > 0);
  }
}

TEST_CASE("polynomial basics") {
  const Polynomial p{1, 2, 3};
  CHECK(p.degree() == 2);
  CHECK(Polynomial().degree() == -1);
  CHECK(p(Rational(2)) == 17);
  CHECK(p.derivative() == Polynomial{2, 6});
  CHECK((p - p).is_zero());
  auto [qt, r] = divmod(p, Polynomial{1, 1});
  CHECK(qt * Polynomial{1, 1} + r == p);
  CHECK(r.degree() < 1);
  CHECK(gcd(Polynomial{-1, 0, 1}, Polynomial{1, 2, 1}) == Polynomial{1, 1});
}

TEST_CASE("taylor shift examples") {
  CHECK(taylor_shift(x() * x(), Rational(1)) == Polynomial{1, 2, 1});
  CHECK(taylor_shift(x(), Rational(0)) == x());
  CHECK(taylor_shift(Polynomial{31, 90}, Rational(-31, 90)) == Polynomial{0, 90});
}

TEST_CASE("taylor shift round trip (property)") {
  gen::Source g(7);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = g.polynomial(6);
    const Rational a = g.rational();
    CHECK(taylor_shift(taylor_shift(p, a), -a) == p);
    const Rational t = g.rational();
    CHECK(taylor_shift(p, a)(t) == p(t + a));
  }
}

TEST_CASE("root counting and rational roots") {
  const Polynomial p = Polynomial::linear_factor(Rational(1, 3)) * Polynomial::linear_factor(Rational(-5, 7)) *
                       Polynomial{1, 0, 1};
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(-5, 7));
  CHECK(roots[1] == Rational(1, 3));
  CHECK(count_roots_above(p, Rational(0)) == 1);
  CHECK(count_roots_above(p, Rational(-1)) == 2);
  CHECK(count_roots_above(Polynomial{1, 0, 1}, Rational(-100)) == 0);
  CHECK(sign_variations(Polynomial{1, -1, 1}) == 2);
}

TEST_CASE("rational functions normalize") {
  const RationalFunction r(Polynomial{-1, 0, 1} * Rational(2), Polynomial{2, 2});
  CHECK(r.den() == Polynomial::constant(Rational(1)));
  CHECK(r.num() == Polynomial{-1, 1});
  CHECK(r(Rational(3)) == 2);
  const RationalFunction s(Polynomial{1, 2}, Polynomial{4, 0, 2});
  CHECK(s.den() == Polynomial{2, 0, 1});
  CHECK(s.num() == Polynomial{Rational(1, 2), 1});
  CHECK_THROWS_AS(RationalFunction(c(1), x())(Rational(0)), Error);
  CHECK(r.shifted(Rational(1))(Rational(2)) == r(Rational(3)));
}

TEST_CASE("rf_derivative examples") {
  CHECK(rf_derivative(RationalFunction(c(1), x())) == RationalFunction(c(-1), x() * x()));
  const Polynomial x1 = x() + c(1);
  CHECK(rf_derivative(RationalFunction(x(), x1)) == RationalFunction(c(1), x1 * x1));
  CHECK(rf_derivative(RationalFunction::constant(Rational(5))).is_zero());
  CHECK(rf_derivative(RationalFunction(c(1), x()), 2) == RationalFunction(c(2), x() * x() * x()));
}

TEST_CASE("series_base_difference examples and closed form") {
  const AsymptoticSeries s3 = series_base_difference(3);
  CHECK(s3.min_order() >= 1);
  CHECK(s3.coefficient(1) == Rational(-1, 2));
  CHECK(s3.coefficient(2) == Rational(1, 3));
  CHECK(s3.coefficient(3) == Rational(-1, 4));
  CHECK(s3.coefficient(0) == 0);
  CHECK(series_base_difference(1).coefficient(1) == Rational(-1, 2));
  const AsymptoticSeries s = series_base_difference(30);
  for (int m = 1; m <= 30; ++m) CHECK(s.coefficient(m) == Rational(m % 2 ? -1 : 1, m + 1));
  // independent route: x ln(1 + 1/x) - 1 from the Mercator series
  for (int m = 1; m <= 30; ++m) CHECK(s.coefficient(m) == mercator_coefficient(Rational(1), m + 1));
  CHECK_THROWS_AS(s3.coefficient(4), Error);
}

TEST_CASE("series_log_ratio_shift examples") {
  const AsymptoticSeries lx = series_log_ratio_shift(RationalFunction(x()), 6);
  for (int m = 1; m <= 6; ++m) CHECK(lx.coefficient(m) == mercator_coefficient(Rational(1), m));
  // ln((x+7/6)/(x+1/6)) = ln(1 + 7/(6x)) - ln(1 + 1/(6x))
  const AsymptoticSeries g = series_log_ratio_shift(RationalFunction(x() + c(Rational(1, 6))), 8);
  CHECK(g.coefficient(1) == 1);
  for (int m = 1; m <= 8; ++m) {
    CHECK(g.coefficient(m) == mercator_coefficient(Rational(7, 6), m) - mercator_coefficient(Rational(1, 6), m));
  }
  CHECK(series_log_ratio_shift(RationalFunction::constant(Rational(3)), 5).is_zero());
}

TEST_CASE("series algebra examples") {
  const AsymptoticSeries inv_x(1, {Rational(1)}, 3);
  const AsymptoticSeries l = series_log1p(inv_x);
  CHECK(l.coefficient(1) == 1);
  CHECK(l.coefficient(2) == Rational(-1, 2));
  CHECK(l.coefficient(3) == Rational(1, 3));
  const AsymptoticSeries a(1, {Rational(1)}, 10), b(2, {Rational(1)}, 10);
  const AsymptoticSeries ab = series_mul(a, b);
  CHECK(ab.leading_order() == 3);
  CHECK(ab.coefficient(3) == 1);
  CHECK(series_add(a, series_scale(a, Rational(-1))).is_zero());
  CHECK_THROWS_AS(series_reciprocal(AsymptoticSeries::zero(5)), Error);
}

TEST_CASE("product truncation never over-claims") {
  const AsymptoticSeries a(1, {Rational(1), Rational(2)}, 4);
  const AsymptoticSeries b(2, {Rational(3)}, 6);
  const AsymptoticSeries ab = series_mul(a, b);
  CHECK(ab.trunc_order() == std::min(4 + 2, 6 + 1));
  const AsymptoticSeries r = series_reciprocal(AsymptoticSeries(0, {Rational(2), Rational(1)}, 5));
  CHECK(r.coefficient(0) == Rational(1, 2));
  CHECK(r.coefficient(1) == Rational(-1, 4));
  CHECK(r.trunc_order() == 5);
}

TEST_CASE("series partial sums track the represented function (property)") {
  // ln((x+1)/x) - 1/x series against direct interval evaluation
  const int n = 8;
  const AsymptoticSeries s = series_log_ratio_shift(RationalFunction(x()), n);
  double prev_ratio = 0;
  for (long xv : {10L, 100L, 1000L}) {
    const Rational xr(xv);
    const Interval exact = iv_ln(iv_from_rational((xr + 1) / xr, 256));
    const Interval approx = iv_from_rational(s.partial_sum(xr), 256);
    const double err = std::fabs((exact - approx).mid_double());
    const double ratio = err * std::pow(static_cast<double>(xv), n + 1);
    CHECK(ratio < 1.0);
    if (prev_ratio > 0) CHECK(ratio < 2 * prev_ratio);
    prev_ratio = ratio;
  }
}

TEST_CASE("operations are pure") {
  const RationalFunction r(Polynomial{1, 2}, Polynomial{3, 0, 1});
  CHECK(series_of_rational(r, 9) == series_of_rational(r, 9));
  CHECK(series_log_ratio_shift(r, 9) == series_log_ratio_shift(r, 9));
}
