#include "gamma_sharp/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "gamma_sharp/error.hpp"

namespace gamma_sharp {

BigFloat::BigFloat(Precision prec) { mpfr_init2(value_, prec); mpfr_set_zero(value_, 1); }

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Rational BigFloat::to_rational() const {
  if (!mpfr_number_p(value_)) throw Error(ErrorCode::kDomain, "non-finite float");
  if (mpfr_zero_p(value_)) return Rational(0);
  Integer m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
  Rational q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()); }
int compare(const BigFloat& a, const Rational& b) { return mpfr_cmp_q(a.get(), b.get_mpq_t()); }

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get())) throw Error(ErrorCode::kDomain, "NaN interval endpoint");
  if (compare(lo_, hi_) > 0) throw Error(ErrorCode::kDomain, "interval with lo > hi");
}

BigFloat Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

BigFloat Interval::mid() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

BigFloat Interval::radius() const {
  BigFloat m = mid();
  BigFloat a(precision());
  BigFloat b(precision());
  mpfr_sub(a.get(), hi_.get(), m.get(), MPFR_RNDU);
  mpfr_sub(b.get(), m.get(), lo_.get(), MPFR_RNDU);
  return compare(a, b) >= 0 ? a : b;
}

double Interval::relative_width() const {
  if (contains_zero()) return INFINITY;
  BigFloat mag(precision());
  if (lo_.sign() > 0) {
    mpfr_set(mag.get(), lo_.get(), MPFR_RNDD);
  } else {
    mpfr_neg(mag.get(), hi_.get(), MPFR_RNDD);
  }
  BigFloat r(precision());
  mpfr_div(r.get(), width().get(), mag.get(), MPFR_RNDU);
  return mpfr_get_d(r.get(), MPFR_RNDU);
}

bool Interval::contains(const Rational& q) const { return compare(lo_, q) <= 0 && compare(hi_, q) >= 0; }

bool Interval::contains(const Interval& o) const { return compare(lo_, o.lo_) <= 0 && compare(hi_, o.hi_) >= 0; }

bool Interval::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

int Interval::sign() const {
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  return 0;
}

bool disjoint(const Interval& a, const Interval& b) {
  return compare(a.hi(), b.lo()) < 0 || compare(b.hi(), a.lo()) < 0;
}

bool intersects(const Interval& a, const Interval& b) { return !disjoint(a, b); }

Interval intersect(const Interval& a, const Interval& b) {
  if (disjoint(a, b)) throw Error(ErrorCode::kDomain, "intersection of disjoint intervals");
  return Interval(compare(a.lo(), b.lo()) >= 0 ? a.lo() : b.lo(), compare(a.hi(), b.hi()) <= 0 ? a.hi() : b.hi());
}

namespace {

Precision join(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

template <typename Op>
Interval monotone_up(const Interval& a, Op op) {
  BigFloat lo(a.precision());
  BigFloat hi(a.precision());
  op(lo.get(), a.lo().get(), MPFR_RNDD);
  op(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval iv_from_rational(const Rational& q, Precision prec) {
  BigFloat lo(prec);
  BigFloat hi(prec);
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval iv_from_int(long v, Precision prec) { return iv_from_rational(Rational(v), prec); }

Interval iv_const_pi(Precision prec) {
  if (prec < 32) throw Error(ErrorCode::kDomain, "precision must be at least 32 bits");
  BigFloat lo(prec);
  BigFloat hi(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval iv_const_e(Precision prec) {
  if (prec < 32) throw Error(ErrorCode::kDomain, "precision must be at least 32 bits");
  return iv_exp(iv_from_int(1, prec));
}

Interval iv_add(const Interval& a, const Interval& b) {
  const Precision p = join(a, b);
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_add(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval iv_sub(const Interval& a, const Interval& b) {
  const Precision p = join(a, b);
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_sub(lo.get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval iv_neg(const Interval& a) {
  BigFloat lo(a.precision());
  BigFloat hi(a.precision());
  mpfr_neg(lo.get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval iv_abs(const Interval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return iv_neg(a);
  BigFloat lo(a.precision());
  BigFloat hi(a.precision());
  BigFloat neg_lo(a.precision());
  mpfr_neg(neg_lo.get(), a.lo().get(), MPFR_RNDU);
  mpfr_max(hi.get(), neg_lo.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

Interval corner_hull(const Interval& a, const Interval& b, BinaryOp op) {
  const Precision p = join(a, b);
  const mpfr_srcptr as[2] = {a.lo().get(), a.hi().get()};
  const mpfr_srcptr bs[2] = {b.lo().get(), b.hi().get()};
  BigFloat lo(p);
  BigFloat hi(p);
  BigFloat t(p);
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      op(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), lo.get()) < 0) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      op(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), hi.get()) > 0) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval iv_mul(const Interval& a, const Interval& b) { return corner_hull(a, b, mpfr_mul); }

Interval iv_div(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Error(ErrorCode::kDivisionByZero, "interval division by an interval containing 0");
  return corner_hull(a, b, mpfr_div);
}

Interval iv_ln(const Interval& a) {
  if (a.lo().sign() <= 0) throw Error(ErrorCode::kDomain, "ln of an interval not strictly positive");
  return monotone_up(a, mpfr_log);
}

Interval iv_exp(const Interval& a) { return monotone_up(a, mpfr_exp); }

Interval iv_sqrt(const Interval& a) {
  if (a.lo().sign() < 0) throw Error(ErrorCode::kDomain, "sqrt of an interval with negative part");
  return monotone_up(a, mpfr_sqrt);
}

Interval iv_root6(const Interval& a) {
  if (a.lo().sign() < 0) throw Error(ErrorCode::kDomain, "sixth root of an interval with negative part");
  return monotone_up(a, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t rnd) { return mpfr_rootn_ui(r, x, 6, rnd); });
}

Interval iv_pow(const Interval& a, const Interval& b) {
  if (a.lo().sign() <= 0) throw Error(ErrorCode::kDomain, "pow needs a strictly positive base");
  return iv_exp(iv_mul(b, iv_ln(a)));
}

Interval iv_pow_int(const Interval& a, long n) {
  if (n < 0) return iv_div(iv_from_int(1, a.precision()), iv_pow_int(a, -n));
  Interval result = iv_from_int(1, a.precision());
  for (long i = 0; i < n; ++i) result = iv_mul(result, a);
  return result;
}

namespace {

std::string format_float(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*R*e", digits - 1, rnd, v);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

std::string render_directed(const BigFloat& a, int digits, bool round_up) {
  return format_float(a.get(), std::max(1, digits), round_up ? MPFR_RNDU : MPFR_RNDD);
}

std::string render(const BigFloat& a, int digits) { return format_float(a.get(), std::max(1, digits), MPFR_RNDN); }

std::string render(const Interval& a, int digits) {
  const Precision p = a.precision();
  if (digits <= 0) {
    const double rel = a.relative_width();
    const int max_digits = static_cast<int>(static_cast<double>(p) * 0.30103) + 1;
    if (!std::isfinite(rel) || rel <= 0) {
      digits = rel == 0 ? max_digits : 6;
    } else {
      digits = std::clamp(static_cast<int>(-std::log10(rel)) + 2, 3, max_digits);
    }
  }
  const std::string mid_text = format_float(a.mid().get(), digits, MPFR_RNDN);
  // Radius measured from the printed midpoint so the rendering is itself an
  // enclosure.
  BigFloat printed_lo(p + 64);
  BigFloat printed_hi(p + 64);
  mpfr_set_str(printed_lo.get(), mid_text.c_str(), 10, MPFR_RNDD);
  mpfr_set_str(printed_hi.get(), mid_text.c_str(), 10, MPFR_RNDU);
  BigFloat up(p + 64);
  BigFloat down(p + 64);
  mpfr_sub(up.get(), a.hi().get(), printed_lo.get(), MPFR_RNDU);
  mpfr_sub(down.get(), printed_hi.get(), a.lo().get(), MPFR_RNDU);
  BigFloat rad(p + 64);
  mpfr_max(rad.get(), up.get(), down.get(), MPFR_RNDU);
  if (rad.sign() < 0) mpfr_set_zero(rad.get(), 1);
  // Two significant digits, rounded up.
  const std::string rad_text = format_float(rad.get(), 2, MPFR_RNDU);
  return mid_text + " ± " + rad_text;
}

}  // namespace gamma_sharp
