#include "gamma_sharp/rational_function.hpp"

#include "gamma_sharp/error.hpp"

namespace gamma_sharp {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d == 0) throw Error(ErrorCode::kPole, "denominator vanishes at x = " + to_string(x));
  return num_(x) / d;
}

RationalFunction RationalFunction::shifted(const Rational& a) const {
  return RationalFunction(taylor_shift(num_, a), taylor_shift(den_, a));
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunction rf_derivative(const RationalFunction& r, int order) {
  if (order < 1 || order > 2) throw Error(ErrorCode::kDomain, "rf_derivative supports order 1 or 2");
  const Polynomial& u = r.num();
  const Polynomial& v = r.den();
  RationalFunction d(u.derivative() * v - u * v.derivative(), v * v);
  return order == 1 ? d : rf_derivative(d, 1);
}

std::string to_string(const RationalFunction& r, const std::string& var) {
  if (r.den().degree() == 0) return to_string(r.num(), var);
  return "(" + to_string(r.num(), var) + ") / (" + to_string(r.den(), var) + ")";
}

}  // namespace gamma_sharp
