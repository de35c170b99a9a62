#pragma once

#include <string>

#include "gamma_sharp/polynomial.hpp"

namespace gamma_sharp {

// num/den in lowest terms with a monic denominator, so equal functions have
// equal representations.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num) : RationalFunction(std::move(num), Polynomial::constant(Rational(1))) {}
  static RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial::constant(c)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Throws kPole when the denominator vanishes at x.
  Rational operator()(const Rational& x) const;

  // R(x + a)
  RationalFunction shifted(const Rational& a) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

// Derivative of the given order (1 or 2) via the quotient rule.
RationalFunction rf_derivative(const RationalFunction& r, int order = 1);

std::string to_string(const RationalFunction& r, const std::string& var = "x");

}  // namespace gamma_sharp
