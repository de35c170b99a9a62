#include "gamma_sharp/oracle.hpp"

#include <cmath>
#include <limits>

#include "gamma_sharp/error.hpp"

namespace gamma_sharp {

namespace {

// B_0 .. B_{2M}
std::vector<Rational> build_bernoulli() {
  const int top = 2 * kBernoulliMax;
  std::vector<Rational> b(static_cast<std::size_t>(top) + 1);
  b[0] = 1;
  for (int m = 1; m <= top; ++m) {
    if (m > 1 && m % 2 == 1) continue;  // odd B_m vanish for m > 1
    Rational acc(0);
    for (int k = 0; k < m; ++k) {
      if (b[static_cast<std::size_t>(k)] == 0) continue;
      acc += Rational(binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(k))) *
             b[static_cast<std::size_t>(k)];
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b;
}

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = build_bernoulli();
  return table;
}

long cutoff_for(Precision p) { return std::max(10L, static_cast<long>((p + 3) / 4)); }

// log|B_{2n}/(2n(2n-1))| - (2n-1) log z, in doubles; only used to pick N.
double log_term(int n, double log_z) {
  const Rational& b = bernoulli_table()[static_cast<std::size_t>(2 * n)];
  const double lb = std::log(std::fabs(b.get_d()));
  return lb - std::log(2.0 * n * (2.0 * n - 1.0)) - (2.0 * n - 1.0) * log_z;
}

// Largest useful N <= M-1 minimising the first omitted term at z.
int choose_terms(double z) {
  const double log_z = std::log(z);
  int best = 1;
  double best_val = std::numeric_limits<double>::infinity();
  for (int n = 1; n < kBernoulliMax; ++n) {
    const double omitted = log_term(n + 1, log_z);
    if (omitted < best_val) {
      best_val = omitted;
      best = n;
    }
  }
  return best;
}

Interval widen(const Interval& a, const Rational& r, Precision w) {
  return iv_add(a, Interval(iv_from_rational(-r, w).lo(), iv_from_rational(r, w).hi()));
}

Interval half_log_two_pi(Precision w) {
  Interval two_pi = iv_mul(iv_from_int(2, w), iv_const_pi(w));
  return iv_mul(iv_from_rational(Rational(1, 2), w), iv_ln(two_pi));
}

}  // namespace

Rational bernoulli(int two_n) {
  if (two_n < 2 || two_n % 2 != 0 || two_n > 2 * kBernoulliMax) {
    throw Error(ErrorCode::kDomain, "bernoulli index must be even in [2, " + std::to_string(2 * kBernoulliMax) + "]");
  }
  return bernoulli_table()[static_cast<std::size_t>(two_n)];
}

Interval oracle_lngamma(const Rational& x, Precision p, LnGammaMethod* method) {
  if (x <= 0) throw Error(ErrorCode::kDomain, "ln Gamma oracle needs x > 0");
  const Precision w = p + 32;
  const long cutoff = cutoff_for(p);
  long shift = 0;
  if (x < cutoff) {
    Rational gap = Rational(cutoff) - x;
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), gap.get_num_mpz_t(), gap.get_den_mpz_t());
    shift = c.get_si();
  }
  const Rational z = x + shift;
  const int terms = choose_terms(z.get_d());

  // Stirling sum and remainder are exact rationals; only the logs are rounded.
  Rational sum(0);
  const Rational inv_z = 1 / z;
  const Rational inv_z2 = inv_z * inv_z;
  Rational zpow = inv_z;  // z^{-(2n-1)}
  for (int n = 1; n <= terms; ++n) {
    sum += bernoulli(2 * n) / Rational(2L * n * (2L * n - 1)) * zpow;
    zpow *= inv_z2;
  }
  // |R_N| <= |first omitted term| for z > 0; doubled as a safety margin.
  const int n1 = terms + 1;
  const Rational remainder = 2 * abs(bernoulli(2 * n1)) / Rational(2L * n1 * (2L * n1 - 1)) * zpow;

  const Interval zi = iv_from_rational(z, w);
  Interval value = iv_mul(iv_from_rational(z - Rational(1, 2), w), iv_ln(zi));
  value = iv_sub(value, zi);
  value = iv_add(value, half_log_two_pi(w));
  value = iv_add(value, iv_from_rational(sum, w));
  value = widen(value, remainder, w);

  if (shift > 0) {
    Rational prod(1);
    for (long j = 0; j < shift; ++j) prod *= x + j;
    value = iv_sub(value, iv_ln(iv_from_rational(prod, w)));
  }
  if (method) *method = LnGammaMethod{shift, cutoff, terms, w};
  return value;
}

Interval oracle_lngamma(const Interval& x, Precision p, LnGammaMethod* method) {
  if (x.lo().sign() <= 0) throw Error(ErrorCode::kDomain, "ln Gamma oracle needs x > 0");
  const Precision w = p + 32;
  const long cutoff = cutoff_for(p);
  const Rational x_lo = x.lo().to_rational();
  long shift = 0;
  if (x_lo < cutoff) {
    Rational gap = Rational(cutoff) - x_lo;
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), gap.get_num_mpz_t(), gap.get_den_mpz_t());
    shift = c.get_si();
  }
  const Interval z = iv_add(x, iv_from_int(shift, w));
  const Rational z_lo = x_lo + shift;
  const int terms = choose_terms(z_lo.get_d());

  Interval sum = iv_from_int(0, w);
  const Interval inv_z = iv_div(iv_from_int(1, w), z);
  const Interval inv_z2 = iv_mul(inv_z, inv_z);
  Interval zpow = inv_z;
  for (int n = 1; n <= terms; ++n) {
    sum = iv_add(sum, iv_mul(iv_from_rational(bernoulli(2 * n) / Rational(2L * n * (2L * n - 1)), w), zpow));
    zpow = iv_mul(zpow, inv_z2);
  }
  // The omitted term is largest at the smallest z.
  const int n1 = terms + 1;
  const Rational remainder = 2 * abs(bernoulli(2 * n1)) / Rational(2L * n1 * (2L * n1 - 1)) /
                             pow(z_lo, static_cast<unsigned>(2 * n1 - 1));

  Interval value = iv_mul(iv_sub(z, iv_from_rational(Rational(1, 2), w)), iv_ln(z));
  value = iv_sub(value, z);
  value = iv_add(value, half_log_two_pi(w));
  value = iv_add(value, sum);
  value = widen(value, remainder, w);
  for (long j = 0; j < shift; ++j) value = iv_sub(value, iv_ln(iv_add(x, iv_from_int(j, w))));
  if (method) *method = LnGammaMethod{shift, cutoff, terms, w};
  return value;
}

Interval oracle_gamma(const Rational& x, Precision p) { return iv_exp(oracle_lngamma(x, p)); }

Interval theta_probe(const Rational& x, Precision p) {
  if (x <= 0) throw Error(ErrorCode::kDomain, "theta probe needs x > 0");
  const Precision w = p + 32;
  const Interval xi = iv_from_rational(x, w);
  // L = ln Gamma(x+1) + x - x ln x
  Interval l = iv_add(oracle_lngamma(x + 1, p), xi);
  l = iv_sub(l, iv_mul(xi, iv_ln(xi)));
  Interval t = iv_sub(iv_mul(iv_from_int(6, w), l), iv_mul(iv_from_int(3, w), iv_ln(iv_const_pi(w))));
  const Rational cubic = 8 * x * x * x + 4 * x * x + x;
  return iv_mul(iv_from_int(30, w), iv_sub(iv_exp(t), iv_from_rational(cubic, w)));
}

}  // namespace gamma_sharp
