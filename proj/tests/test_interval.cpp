#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "gamma_sharp/error.hpp"
#include "gamma_sharp/interval.hpp"

using namespace gamma_sharp;

namespace {

Interval iv(long v, Precision p = 128) { return iv_from_int(v, p); }
Interval ivq(const Rational& r, Precision p = 128) { return iv_from_rational(r, p); }

// pi from Machin's formula over exact rationals with an alternating-series
// tail bound: pi = 16 atan(1/5) - 4 atan(1/239).
std::pair<Rational, Rational> machin_pi(int terms) {
  auto atan_inv = [&](long n) {
    Rational sum(0), tail(0);
    for (int k = 0; k <= terms; ++k) {
      const Rational t = Rational(1) / (Rational(2 * k + 1) * pow(Rational(n), static_cast<unsigned>(2 * k + 1)));
      if (k == terms) {
        tail = t;
      } else {
        sum += (k % 2 ? -t : t);
      }
    }
    return std::make_pair(sum, tail);
  };
  auto [a, ta] = atan_inv(5);
  auto [b, tb] = atan_inv(239);
  return {16 * a - 4 * b, 16 * ta + 4 * tb};
}

}  // namespace

TEST_CASE("interval arithmetic examples") {
  const Interval s = iv(1) + iv(2);
  CHECK(s.contains(Rational(3)));
  CHECK(s.width().is_zero());
  const Interval m = Interval(iv(1).lo(), iv(2).hi()) * Interval(iv(-1).lo(), iv(1).hi());
  CHECK(compare(m.lo(), Rational(-2)) == 0);
  CHECK(compare(m.hi(), Rational(2)) == 0);
  const Interval third = iv(1) / iv(3);
  CHECK(third.contains(Rational(1, 3)));
  CHECK(third.width_double() <= 2 * std::ldexp(1.0, -127));
  CHECK_THROWS_AS(iv(1) / Interval(iv(-1).lo(), iv(1).hi()), Error);
}

TEST_CASE("transcendental examples") {
  CHECK(iv_exp(iv(0)).contains(Rational(1)));
  CHECK(iv_ln(iv_exp(iv(1))).contains(Rational(1)));
  CHECK(iv_root6(iv(64)).contains(Rational(2)));
  CHECK(iv_sqrt(iv(49)).contains(Rational(7)));
  CHECK(iv_pow(iv(2), iv(10)).contains(Rational(1024)));
  CHECK_THROWS_AS(iv_ln(iv(0)), Error);
  CHECK_THROWS_AS(iv_sqrt(iv(-1)), Error);
}

TEST_CASE("constants") {
  const Interval third = ivq(Rational(1, 3));
  CHECK(third.contains(Rational(1, 3)));
  CHECK(third.relative_width() <= std::ldexp(1.0, -126));
  const Interval e = iv_const_e(128);
  CHECK(intersects(e, iv_exp(iv(1, 256))));
  CHECK(compare(e.lo(), parse_rational("2.71828182845904523536")) > 0);
  CHECK(compare(e.hi(), parse_rational("2.71828182845904523537")) < 0);
  const auto [pi, tail] = machin_pi(40);
  const Interval pi64 = iv_const_pi(64);
  CHECK(pi64.contains(pi - tail));
  CHECK(pi64.contains(pi + tail));
  CHECK(pi64.contains(parse_rational("3.14159265358979323846")));
  CHECK(pi64.relative_width() <= std::ldexp(1.0, -62));
  CHECK_THROWS_AS(iv_const_pi(16), Error);
}

TEST_CASE("refinement monotonicity (property)") {
  gen::Source g(5);
  for (int i = 0; i < 60; ++i) {
    const Rational a = g.positive(), b = g.positive();
    for (Precision p : {64, 128, 200}) {
      const Precision p2 = 2 * p;
      CHECK(ivq(a, p).contains(ivq(a, p2)));
      CHECK((ivq(a, p) + ivq(b, p)).contains(ivq(a, p2) + ivq(b, p2)));
      CHECK((ivq(a, p) * ivq(b, p)).contains(ivq(a, p2) * ivq(b, p2)));
      CHECK((ivq(a, p) / ivq(b, p)).contains(ivq(a, p2) / ivq(b, p2)));
      CHECK(iv_ln(ivq(a, p)).contains(iv_ln(ivq(a, p2))));
      CHECK(iv_exp(ivq(a / 10, p)).contains(iv_exp(ivq(a / 10, p2))));
      CHECK(iv_sqrt(ivq(a, p)).contains(iv_sqrt(ivq(a, p2))));
      CHECK(iv_root6(ivq(a, p)).contains(iv_root6(ivq(a, p2))));
    }
  }
}

TEST_CASE("exactness on representable values") {
  CHECK((iv(3) * iv(5)).width().is_zero());
  CHECK((iv(7) - iv(9)).width().is_zero());
  CHECK(iv_sqrt(iv(16)).width().is_zero());
}

TEST_CASE("pow consistency with repeated multiplication") {
  gen::Source g(9);
  for (int i = 0; i < 30; ++i) {
    const Interval a = ivq(g.positive(30, 7));
    const long n = g.integer(1, 8);
    const Interval byexp = iv_pow(a, iv(n));
    const Interval bymul = iv_pow_int(a, n);
    CHECK(intersects(byexp, bymul));
  }
}

TEST_CASE("precision travels with values") {
  const Interval a = ivq(Rational(1, 3), 64);
  const Interval b = ivq(Rational(1, 7), 256);
  CHECK((a + b).precision() == 256);
  CHECK(a.precision() == 64);
}

TEST_CASE("rendering carries a width") {
  const std::string s = render(ivq(Rational(1, 3)));
  CHECK(s.find("±") != std::string::npos);
  CHECK(render(iv(2)).find("±") != std::string::npos);
}
