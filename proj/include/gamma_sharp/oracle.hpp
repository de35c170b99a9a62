#pragma once

#include <vector>

#include "gamma_sharp/interval.hpp"

namespace gamma_sharp {

inline constexpr int kBernoulliMax = 60;  // B_2 .. B_120

// B_{2n} for 1 <= n <= 60, from the convolution recurrence. The table is
// built once on first use (thread-safe static initialisation).
Rational bernoulli(int two_n);

// How an ln-gamma enclosure was produced, for reproducibility reports.
struct LnGammaMethod {
  long shift = 0;        // m: series evaluated at x + m
  long cutoff = 0;       // max(10, ceil(p/4))
  int terms = 0;         // N Stirling terms kept
  Precision working = 0; // internal precision
};

Interval oracle_lngamma(const Rational& x, Precision p, LnGammaMethod* method = nullptr);
Interval oracle_lngamma(const Interval& x, Precision p, LnGammaMethod* method = nullptr);
Interval oracle_gamma(const Rational& x, Precision p);

// theta_x = 30 (pi^-3 (Gamma(x+1) e^x x^-x)^6 - 8x^3 - 4x^2 - x)
Interval theta_probe(const Rational& x, Precision p);

}  // namespace gamma_sharp
