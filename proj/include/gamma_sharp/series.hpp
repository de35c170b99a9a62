#pragma once

#include <string>
#include <vector>

#include "gamma_sharp/rational_function.hpp"

namespace gamma_sharp {

// Truncated expansion sum_{m=min_order}^{trunc_order} c_m x^{-m}; terms
// beyond trunc_order are unknown and never reported.
class AsymptoticSeries {
 public:
  AsymptoticSeries(int min_order, std::vector<Rational> coeffs, int trunc_order);

  static AsymptoticSeries zero(int trunc_order) { return AsymptoticSeries(trunc_order + 1, {}, trunc_order); }

  int min_order() const { return min_order_; }
  int trunc_order() const { return trunc_order_; }

  // Coefficient of x^{-m}; throws kTruncation when m > trunc_order.
  Rational coefficient(int m) const;

  // Lowest order with a nonzero coefficient, or trunc_order + 1 when every
  // known coefficient vanishes.
  int leading_order() const;
  bool is_zero() const { return leading_order() > trunc_order_; }

  // Exact partial sum at x (all known terms).
  Rational partial_sum(const Rational& x) const;

  AsymptoticSeries truncated(int trunc_order) const;

  friend bool operator==(const AsymptoticSeries& a, const AsymptoticSeries& b);

 private:
  int min_order_;
  int trunc_order_;
  std::vector<Rational> coeffs_;  // coeffs_[i] multiplies x^{-(min_order_ + i)}
};

AsymptoticSeries series_add(const AsymptoticSeries& a, const AsymptoticSeries& b);
AsymptoticSeries series_sub(const AsymptoticSeries& a, const AsymptoticSeries& b);
AsymptoticSeries series_scale(const AsymptoticSeries& a, const Rational& c);
AsymptoticSeries series_mul(const AsymptoticSeries& a, const AsymptoticSeries& b);
// 1/s around its leading nonzero term; throws kDivisionByZero if none is known.
AsymptoticSeries series_reciprocal(const AsymptoticSeries& s);
// log(1 + s) for s with min_order >= 1.
AsymptoticSeries series_log1p(const AsymptoticSeries& s);

// p(x) as an exact series (min_order = -deg p), known through order n.
AsymptoticSeries series_of_polynomial(const Polynomial& p, int n);
AsymptoticSeries series_of_rational(const RationalFunction& r, int n);

// -1 + x*ln(1 + 1/x), coefficient of x^{-m} is (-1)^m/(m+1).
AsymptoticSeries series_base_difference(int n);

// ln(R(x+1)/R(x)) through order n.
AsymptoticSeries series_log_ratio_shift(const RationalFunction& r, int n);

// ln(1 + c/x) through order n.
AsymptoticSeries series_log1p_linear(const Rational& c, int n);

std::string to_string(const AsymptoticSeries& s);

}  // namespace gamma_sharp
