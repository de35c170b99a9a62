#pragma once

#include <random>

#include "gamma_sharp/polynomial.hpp"

namespace gen {

using gamma_sharp::Polynomial;
using gamma_sharp::Rational;

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long max_num = 50, long max_den = 20) {
    Rational r(integer(-max_num, max_num), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Rational positive(long max_num = 50, long max_den = 20) {
    Rational r(integer(1, max_num), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Polynomial polynomial(int max_degree = 5) {
    std::vector<Rational> c;
    const int d = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= d; ++i) c.push_back(rational());
    return Polynomial(c);
  }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
