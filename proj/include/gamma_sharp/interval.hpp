#pragma once

#include <mpfr.h>

#include <string>

#include "gamma_sharp/rational.hpp"

namespace gamma_sharp {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;

// Owning MPFR float. The precision travels with the value; there is no
// global working precision.
class BigFloat {
 public:
  explicit BigFloat(Precision prec = kDefaultPrecision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  Precision precision() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  // Exact value as a rational (every finite float is dyadic).
  Rational to_rational() const;

 private:
  mpfr_t value_;
};

int compare(const BigFloat& a, const BigFloat& b);
int compare(const BigFloat& a, const Rational& b);

// Closed interval [lo, hi] with outward-rounded endpoints; every operation
// returns an enclosure of the exact result.
class Interval {
 public:
  Interval(BigFloat lo, BigFloat hi);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  Precision precision() const { return std::max(lo_.precision(), hi_.precision()); }

  BigFloat width() const;   // rounded up
  BigFloat mid() const;     // rounded to nearest
  BigFloat radius() const;  // max distance from mid(), rounded up
  double mid_double() const { return mid().to_double(); }
  double width_double() const { return width().to_double(); }
  // width / min |x| over the interval (infinite when 0 is inside).
  double relative_width() const;

  bool contains(const Rational& q) const;
  bool contains(const Interval& other) const;
  bool contains_zero() const;
  bool strictly_positive() const { return lo_.sign() > 0; }
  bool strictly_negative() const { return hi_.sign() < 0; }
  // +1 / -1 when the interval excludes zero, 0 otherwise.
  int sign() const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

bool disjoint(const Interval& a, const Interval& b);
bool intersects(const Interval& a, const Interval& b);
// Intersection; throws kDomain when disjoint.
Interval intersect(const Interval& a, const Interval& b);

Interval iv_from_rational(const Rational& q, Precision prec);
Interval iv_from_int(long v, Precision prec);
Interval iv_const_pi(Precision prec);
Interval iv_const_e(Precision prec);

Interval iv_add(const Interval& a, const Interval& b);
Interval iv_sub(const Interval& a, const Interval& b);
Interval iv_mul(const Interval& a, const Interval& b);
Interval iv_div(const Interval& a, const Interval& b);  // throws kDivisionByZero when 0 in b
Interval iv_neg(const Interval& a);
Interval iv_abs(const Interval& a);

Interval iv_ln(const Interval& a);    // a > 0
Interval iv_exp(const Interval& a);
Interval iv_sqrt(const Interval& a);  // a >= 0
Interval iv_root6(const Interval& a); // a >= 0
Interval iv_pow(const Interval& a, const Interval& b);  // exp(b ln a), a > 0
Interval iv_pow_int(const Interval& a, long n);          // repeated multiplication

inline Interval operator+(const Interval& a, const Interval& b) { return iv_add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return iv_sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return iv_mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return iv_div(a, b); }
inline Interval operator-(const Interval& a) { return iv_neg(a); }

// "mid ± radius" where the printed midpoint and radius still enclose the
// interval. `digits` = 0 picks a length from the interval's width.
std::string render(const Interval& a, int digits = 0);
std::string render(const BigFloat& a, int digits = 17);
// Decimal string rounded down (or up), so [down(lo), up(hi)] still encloses.
std::string render_directed(const BigFloat& a, int digits, bool round_up);

}  // namespace gamma_sharp
