#include "gamma_sharp/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "gamma_sharp/error.hpp"

namespace gamma_sharp {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const Rational& root) {
  return Polynomial(std::vector<Rational>{Rational(-root), Rational(1)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::kDomain, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial r = *this;
  Rational inv = 1 / leading();
  r *= inv;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coefficients();
  const Rational inv_lead = 1 / b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] * inv_lead;
    quo[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

bool divides(const Polynomial& divisor, const Polynomial& p) { return divmod(p, divisor).second.is_zero(); }

std::vector<Integer> primitive_integer_coefficients(const Polynomial& p) {
  if (p.is_zero()) return {};
  Integer lcm_den(1);
  for (const auto& c : p.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coefficients().size());
  Integer content(0);
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  Integer content(0);
  for (const auto& v : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (p.back() < 0) content = -content;
  for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
}

// lc(b)^(da-db+1) * a mod b, computed fraction-free.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Integer la = a.back();
    for (auto& v : a) v *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

Polynomial from_integers(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p) v.emplace_back(c);
  return Polynomial(std::move(v));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IntPoly x = primitive_integer_coefficients(a);
  IntPoly y = primitive_integer_coefficients(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = pseudo_remainder(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return from_integers(x).monic();
}

Polynomial taylor_shift(const Polynomial& p, const Rational& a) {
  // Repeated synthetic division (Horner's scheme), O(n^2) exact operations.
  std::vector<Rational> c = p.coefficients();
  const int n = p.degree();
  if (n < 1 || a == 0) return p;
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) c[static_cast<std::size_t>(j)] += a * c[static_cast<std::size_t>(j + 1)];
  }
  return Polynomial(std::move(c));
}

Polynomial power(const Polynomial& p, unsigned int n) {
  Polynomial result = Polynomial::constant(Rational(1));
  Polynomial base = p;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

int sign_variations(const Polynomial& p) {
  int last = 0;
  int changes = 0;
  for (const auto& c : p.coefficients()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

namespace {

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // Only signs matter; rescale to keep coefficients small.
    auto ints = primitive_integer_coefficients(r);
    Polynomial scaled = from_integers(ints);
    if (sgn(scaled.leading()) != sgn(r.leading())) scaled = -scaled;
    seq.push_back(-scaled);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int variations_at(const std::vector<Polynomial>& seq, const Rational& x) {
  int last = 0;
  int changes = 0;
  for (const auto& q : seq) {
    const int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int variations_at_infinity(const std::vector<Polynomial>& seq) {
  int last = 0;
  int changes = 0;
  for (const auto& q : seq) {
    const int s = sgn(q.leading());
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Polynomial squarefree_part(const Polynomial& p) {
  Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_between(Rational lo, Rational hi) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // lo and hi share the integer part fl: recurse on reciprocals of fractional parts.
  Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / inner;
}

}  // namespace

int count_roots_above(const Polynomial& p, const Rational& a) {
  if (p.degree() < 1) return 0;
  const auto seq = sturm_sequence(squarefree_part(p));
  return variations_at(seq, a) - variations_at_infinity(seq);
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.degree() < 1) return {};
  const Polynomial sf = squarefree_part(p);
  const auto ints = primitive_integer_coefficients(sf);
  const Integer lead = abs(ints.back());
  const auto seq = sturm_sequence(sf);

  // Cauchy bound for all roots.
  Rational bound(0);
  for (const auto& c : sf.coefficients()) bound = std::max(bound, Rational(abs(c)));
  bound += 1;

  // Two distinct rationals with denominators dividing `lead` are at least
  // 1/lead^2 apart, so an isolating interval narrower than that contains at
  // most one such candidate: the simplest rational inside it.
  const Rational resolution = Rational(1) / (Rational(lead) * lead * 4);

  std::vector<Rational> roots;
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int n = variations_at(seq, lo) - variations_at(seq, hi);  // roots in (lo, hi]
    if (n == 0) continue;
    if (n == 1 && sf(hi) == 0) {
      roots.push_back(hi);
      continue;
    }
    if (n == 1 && hi - lo < resolution) {
      Rational candidate = simplest_between(lo, hi);
      if (sf(candidate) == 0) roots.push_back(candidate);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << to_string(mag);
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace gamma_sharp
