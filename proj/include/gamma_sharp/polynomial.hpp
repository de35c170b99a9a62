#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gamma_sharp/rational.hpp"

namespace gamma_sharp {

// Dense univariate polynomial over Q; coefficients()[i] multiplies x^i.
// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int power);
  static Polynomial identity() { return monomial(Rational(1), 1); }
  // (x - root)
  static Polynomial linear_factor(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int power) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& divisor, const Polynomial& p);

// Monic gcd (zero if both are zero). Runs a primitive remainder sequence over
// the integers to keep coefficient growth in check.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// q(t) = p(t + a)
Polynomial taylor_shift(const Polynomial& p, const Rational& a);

// p(x)^n
Polynomial power(const Polynomial& p, unsigned int n);

// Polynomial scaled to integer coefficients with content 1 and positive
// leading coefficient.
std::vector<Integer> primitive_integer_coefficients(const Polynomial& p);

// Number of sign changes in the coefficient sequence (zeros skipped).
int sign_variations(const Polynomial& p);

// Number of distinct real roots in (a, +inf), by Sturm sequence.
int count_roots_above(const Polynomial& p, const Rational& a);

// All rational roots (distinct), ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

std::string to_string(const Polynomial& p, const std::string& var = "x");

}  // namespace gamma_sharp
