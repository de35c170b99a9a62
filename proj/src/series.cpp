#include "gamma_sharp/series.hpp"

#include <algorithm>
#include <sstream>

#include "gamma_sharp/error.hpp"

namespace gamma_sharp {

AsymptoticSeries::AsymptoticSeries(int min_order, std::vector<Rational> coeffs, int trunc_order)
    : min_order_(min_order), trunc_order_(trunc_order), coeffs_(std::move(coeffs)) {
  const int known = std::max(0, trunc_order_ - min_order_ + 1);
  if (static_cast<int>(coeffs_.size()) > known) coeffs_.resize(static_cast<std::size_t>(known));
  // Strip leading zeros so min_order_ tracks the first nonzero coefficient.
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_order_ = trunc_order_ + 1;
  } else if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_order_ += static_cast<int>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational AsymptoticSeries::coefficient(int m) const {
  if (m > trunc_order_) {
    throw Error(ErrorCode::kTruncation,
                "coefficient x^-" + std::to_string(m) + " beyond truncation order " + std::to_string(trunc_order_));
  }
  const int i = m - min_order_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

int AsymptoticSeries::leading_order() const { return coeffs_.empty() ? trunc_order_ + 1 : min_order_; }

Rational AsymptoticSeries::partial_sum(const Rational& x) const {
  Rational acc(0);
  const Rational inv = 1 / x;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inv;
    acc += *it;
  }
  // acc = sum c_i x^{-i}; multiply by x^{-min_order}.
  if (min_order_ >= 0) return acc * pow(inv, static_cast<unsigned>(min_order_));
  return acc * pow(x, static_cast<unsigned>(-min_order_));
}

AsymptoticSeries AsymptoticSeries::truncated(int trunc_order) const {
  return AsymptoticSeries(min_order_, coeffs_, std::min(trunc_order, trunc_order_));
}

bool operator==(const AsymptoticSeries& a, const AsymptoticSeries& b) {
  return a.trunc_order_ == b.trunc_order_ && a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.min_order_ == b.min_order_);
}

namespace {

AsymptoticSeries combine(const AsymptoticSeries& a, const AsymptoticSeries& b, const Rational& sb) {
  const int trunc = std::min(a.trunc_order(), b.trunc_order());
  const int lo = std::min(a.min_order(), b.min_order());
  if (lo > trunc) return AsymptoticSeries::zero(trunc);
  std::vector<Rational> c(static_cast<std::size_t>(trunc - lo + 1));
  for (int m = lo; m <= trunc; ++m) {
    c[static_cast<std::size_t>(m - lo)] = a.coefficient(m) + sb * b.coefficient(m);
  }
  return AsymptoticSeries(lo, std::move(c), trunc);
}

}  // namespace

AsymptoticSeries series_add(const AsymptoticSeries& a, const AsymptoticSeries& b) { return combine(a, b, Rational(1)); }

AsymptoticSeries series_sub(const AsymptoticSeries& a, const AsymptoticSeries& b) { return combine(a, b, Rational(-1)); }

AsymptoticSeries series_scale(const AsymptoticSeries& a, const Rational& c) {
  const int lo = a.min_order();
  const int trunc = a.trunc_order();
  if (lo > trunc || c == 0) return AsymptoticSeries::zero(trunc);
  std::vector<Rational> v(static_cast<std::size_t>(trunc - lo + 1));
  for (int m = lo; m <= trunc; ++m) v[static_cast<std::size_t>(m - lo)] = c * a.coefficient(m);
  return AsymptoticSeries(lo, std::move(v), trunc);
}

AsymptoticSeries series_mul(const AsymptoticSeries& a, const AsymptoticSeries& b) {
  // Every term of a is paired with b's unknown tail beyond b.trunc_order and
  // vice versa, so the product is only known through the smaller of
  // a.trunc + b.min and b.trunc + a.min.
  if (a.is_zero() || b.is_zero()) {
    const int t = std::min(a.trunc_order() + b.leading_order(), b.trunc_order() + a.leading_order());
    return AsymptoticSeries::zero(t);
  }
  const int am = a.min_order();
  const int bm = b.min_order();
  const int trunc = std::min(a.trunc_order() + bm, b.trunc_order() + am);
  const int lo = am + bm;
  if (lo > trunc) return AsymptoticSeries::zero(trunc);
  std::vector<Rational> c(static_cast<std::size_t>(trunc - lo + 1));
  for (int i = am; i <= a.trunc_order(); ++i) {
    const Rational ai = a.coefficient(i);
    if (ai == 0) continue;
    for (int j = bm; i + j <= trunc && j <= b.trunc_order(); ++j) {
      c[static_cast<std::size_t>(i + j - lo)] += ai * b.coefficient(j);
    }
  }
  return AsymptoticSeries(lo, std::move(c), trunc);
}

AsymptoticSeries series_reciprocal(const AsymptoticSeries& s) {
  if (s.is_zero()) throw Error(ErrorCode::kDivisionByZero, "reciprocal of a series with no known nonzero term");
  const int m0 = s.min_order();
  const int n = s.trunc_order();
  // s = c0 x^{-m0} (1 + t) with t known through relative order n - m0.
  const int rel = n - m0;
  const Rational c0 = s.coefficient(m0);
  std::vector<Rational> a(static_cast<std::size_t>(rel + 1));
  for (int i = 0; i <= rel; ++i) a[static_cast<std::size_t>(i)] = s.coefficient(m0 + i);
  std::vector<Rational> r(static_cast<std::size_t>(rel + 1));
  r[0] = 1 / c0;
  for (int k = 1; k <= rel; ++k) {
    Rational acc(0);
    for (int i = 1; i <= k; ++i) acc += a[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
    r[static_cast<std::size_t>(k)] = -acc / c0;
  }
  return AsymptoticSeries(-m0, std::move(r), -m0 + rel);
}

AsymptoticSeries series_log1p(const AsymptoticSeries& s) {
  const int n = s.trunc_order();
  if (s.is_zero()) return AsymptoticSeries::zero(n);
  if (s.min_order() < 1) throw Error(ErrorCode::kDomain, "log1p needs a series without constant or growing terms");
  // Mercator series; s^k starts at order k*min_order, so k <= n / min_order.
  AsymptoticSeries result = AsymptoticSeries::zero(n);
  AsymptoticSeries term = s;
  for (int k = 1; k * s.min_order() <= n; ++k) {
    const Rational w = Rational(k % 2 == 1 ? 1 : -1, k);
    result = series_add(result, series_scale(term, w));
    term = series_mul(term, s);
  }
  return result;
}

AsymptoticSeries series_of_polynomial(const Polynomial& p, int n) {
  if (p.is_zero()) return AsymptoticSeries::zero(n);
  const int d = p.degree();
  // x^d, x^{d-1}, ... i.e. orders -d, -d+1, ..., 0
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(d) + 1);
  for (int i = d; i >= 0; --i) c.push_back(p.coefficient(i));
  return AsymptoticSeries(-d, std::move(c), n);
}

AsymptoticSeries series_of_rational(const RationalFunction& r, int n) {
  if (r.is_zero()) return AsymptoticSeries::zero(n);
  // Expand den with enough slack that the quotient is known through n.
  const int dn = r.num().degree();
  const int dd = r.den().degree();
  const int slack = n + 2 * dd + 2;
  AsymptoticSeries num = series_of_polynomial(r.num(), slack);
  AsymptoticSeries inv = series_reciprocal(series_of_polynomial(r.den(), slack));
  (void)dn;
  return series_mul(num, inv).truncated(n);
}

AsymptoticSeries series_base_difference(int n) {
  if (n < 1) throw Error(ErrorCode::kDomain, "series_base_difference needs N >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) c[static_cast<std::size_t>(m - 1)] = Rational(m % 2 == 0 ? 1 : -1, m + 1);
  return AsymptoticSeries(1, std::move(c), n);
}

namespace {

// ln(P(x+1)/P(x)) for a nonzero polynomial P.
AsymptoticSeries log_ratio_shift_poly(const Polynomial& p, int n) {
  if (p.is_zero()) throw Error(ErrorCode::kDomain, "log-ratio of the zero polynomial");
  if (p.degree() == 0) return AsymptoticSeries::zero(n);
  const int d = p.degree();
  const Polynomial shifted = taylor_shift(p, Rational(1));
  // P(x)/x^d and P(x+1)/x^d as series starting at order 0, exact.
  std::vector<Rational> a(static_cast<std::size_t>(d) + 1);
  std::vector<Rational> b(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    a[static_cast<std::size_t>(i)] = shifted.coefficient(d - i);
    b[static_cast<std::size_t>(i)] = p.coefficient(d - i);
  }
  AsymptoticSeries num(0, std::move(a), n);
  AsymptoticSeries den(0, std::move(b), n);
  AsymptoticSeries ratio = series_mul(num, series_reciprocal(den));
  AsymptoticSeries minus_one = series_sub(ratio, AsymptoticSeries(0, {Rational(1)}, n));
  return series_log1p(minus_one);
}

}  // namespace

AsymptoticSeries series_log_ratio_shift(const RationalFunction& r, int n) {
  if (r.is_zero()) throw Error(ErrorCode::kDomain, "R(x+1)/R(x) is undefined for R = 0");
  return series_sub(log_ratio_shift_poly(r.num(), n), log_ratio_shift_poly(r.den(), n));
}

AsymptoticSeries series_log1p_linear(const Rational& c, int n) {
  return series_log1p(AsymptoticSeries(1, {c}, n));
}

std::string to_string(const AsymptoticSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (int m = s.min_order(); m <= s.trunc_order(); ++m) {
    const Rational c = s.coefficient(m);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")*x^" << -m;
  }
  if (first) os << "0";
  os << " + O(x^" << -(s.trunc_order() + 1) << ")";
  return os.str();
}

}  // namespace gamma_sharp
