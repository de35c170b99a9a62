#include "gamma_sharp/rational.hpp"

#include <cctype>
#include <string>

#include "gamma_sharp/error.hpp"

namespace gamma_sharp {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain: return "DOMAIN";
    case ErrorCode::kDivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::kTruncation: return "TRUNCATION";
    case ErrorCode::kUnresolvedUnknown: return "UNRESOLVED_UNKNOWN";
    case ErrorCode::kNoRationalRoot: return "NO_RATIONAL_ROOT";
    case ErrorCode::kNonlinearUnresolved: return "NONLINEAR_UNRESOLVED";
    case ErrorCode::kPole: return "POLE";
    case ErrorCode::kWidthExceeded: return "WIDTH_EXCEEDED";
    case ErrorCode::kUsage: return "USAGE";
  }
  return "UNKNOWN";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorCode::kUsage, "malformed integer '" + std::string(s) + "'");
  }
  Integer v(std::string(s), 10);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::kUsage, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal with optional fraction and exponent.
  long exponent = 0;
  std::string_view mantissa = text;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    Integer ev = parse_integer(text.substr(e + 1));
    if (!ev.fits_slong_p() || abs(ev) > 100000) throw Error(ErrorCode::kUsage, "exponent out of range");
    exponent = ev.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view whole = mantissa.substr(0, dot);
    std::string_view frac = mantissa.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw Error(ErrorCode::kUsage, "malformed number '" + std::string(text) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(mantissa)) throw Error(ErrorCode::kUsage, "malformed number '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  Rational q{Integer(digits, 10)};
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) {
    q *= scale;
  } else {
    q /= scale;
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

int sign(const Rational& q) { return sgn(q); }

Rational pow(const Rational& base, unsigned int exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

}  // namespace gamma_sharp
