// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <sstream>

#include "gamma_sharp/analysis.hpp"
#include "gamma_sharp/grid.hpp"
#include "gamma_sharp/oracle.hpp"

using namespace gamma_sharp;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Rational q(const char* s) { return parse_rational(s); }

std::vector<Rational> derived_constants(Family f, int k) {
  std::vector<Rational> out;
  for (const auto& level : derive_family(f, k).levels) {
    for (const auto& c : level.constants) out.push_back(c.value);
  }
  return out;
}

Outcome compare_constants(Family f, int k, const std::vector<const char*>& printed) {
  const auto got = derived_constants(f, k);
  std::ostringstream os;
  bool ok = got.size() == printed.size();
  for (std::size_t i = 0; i < std::min(got.size(), printed.size()); ++i) {
    if (got[i] != q(printed[i])) {
      ok = false;
      os << " mismatch#" << i << " " << to_string(got[i]) << " vs " << printed[i];
    }
  }
  os << " " << family_cli_name(f) << ": " << got.size() << " constants";
  return {ok, os.str()};
}

Outcome criterion1() {
  return compare_constants(Family::kGosperCF, 3,
                           {"1/72", "31/90", "5929/32400", "481937/3735270", "76899172249/248039857296",
                            "7745462509019287/19149278075101482",
                            "786873417270631211749921/851541507731717527392144",
                            "2098335745817751685364201067279071/30311088872486921466334781589254970"});
}

Outcome criterion2() {
  Outcome a = compare_constants(
      Family::kGosperProduct, 3,
      {"-1/144", "4007/21600", "4394/637875", "130311599/15575040", "7894414898425/119793516544",
       "-265702682899837009577/34427631789478287360", "1897560849252106177858465792/77174813342532578267347147395",
       "30320380455616293004898928163131563244811979/6134364315672065325746652708240298034227200"});
  Outcome b = compare_constants(
      Family::kRamanujanCF, 3,
      {"-11/240", "79/154", "459733/711480", "-1455925/70798882", "49600874140433/101450127018720",
       "10259108965771635091/19545564575317443762", "169085305336152527131511003963/101221579151797375403194730976",
       "-6141448535908002711219920016488834171/203275987838924050801436670299517447102"});
  Outcome c = compare_constants(Family::kRamanujanMixed, 1,
                                {"-11/240", "79/154", "459733/15523200", "71181889/70798882",
                                 "717183502490887/520777318696096", "1118629052995381153799/1958878792277282473920"});
  return {a.pass && b.pass && c.pass, a.detail + ";" + b.detail + ";" + c.detail};
}

Outcome criterion3() {
  const AsymptoticSeries s = expand_difference(make_template(Family::kGosperCF, 0), -1, 6);
  const Rational c3 = s.coefficient(3), c4 = s.coefficient(4);
  std::ostringstream os;
  os << "x^-3: " << to_string(c3) << " (want -1/72), x^-4: " << to_string(c4) << " (want 17/540)";
  const bool pass = c3 == q("-1/72") && c4 == q("17/540");
  if (!pass && abs(c3) == q("1/72") && abs(c4) == q("17/540")) {
    os << "; magnitudes match, signs opposite. Independent check: E = ln Gamma(x+1) - ln A(x) for the uncorrected"
          " Gosper formula is +0.00399 at x=1 and ~+1/(144 x^2) for large x, so E(x)-E(x+1) ~ +1/(72 x^3).";
  }
  return {pass, os.str()};
}

Outcome limit_case(const ApproximantDef& def, const Rational& l_mag, const Rational& lim_mag) {
  const RateReport r = mortici_estimate(def, 5, {250, 500, 1000}, 128);
  const double measured = std::fabs(r.limit_check.mid_double());
  const double rel = std::fabs(measured - lim_mag.get_d()) / lim_mag.get_d();
  std::ostringstream os;
  os << def.name() << ": series order " << r.series_order << " coeff " << to_string(r.l_exact) << ", |x^4 E(1000)| (Richardson) "
     << measured << " vs " << to_string(lim_mag) << " rel " << rel;
  return {r.series_order == 5 && abs(r.l_exact) == l_mag && rel <= 0.01, os.str()};
}

Outcome criterion4() {
  Outcome a = limit_case(make_approximant(ApproxFamily::kRamanujanBase), q("11/2880"), q("11/11520"));
  Outcome b = limit_case(make_approximant(ApproxFamily::kGosperCF, 0), q("5929/1166400"), q("5929/4665600"));
  return {a.pass && b.pass, a.detail + "; " + b.detail};
}

Outcome criterion5() {
  const auto grid = make_grid(Rational(100), Rational(10000), GridScheme::kLog10, 9);
  bool ok = true;
  std::ostringstream os;
  for (const ApproximantDef& def : all_approximants()) {
    if (!is_corrected(def.family)) continue;
    double target = 0, tol = 0.05;
    switch (def.family) {
      case ApproxFamily::kGosperCF: target = 2 * def.k + 4; break;
      case ApproxFamily::kGosperProduct: target = 2 * def.k + 5; break;
      case ApproxFamily::kRamanujanCF: target = 2 * def.k + 6; break;
      default: target = 10; tol = 0.1;
    }
    const double mu = order_fit(def, grid, 256).mu;
    const bool pass = std::fabs(mu - target) <= tol;
    ok = ok && pass;
    os << def.name() << "=" << std::round(mu * 1000) / 1000 << (pass ? "" : "(!)") << " ";
  }
  return {ok, os.str()};
}

Outcome criterion6() {
  bool ok = true;
  Integer f = 1;
  for (unsigned n = 0; n <= 20; ++n) {
    if (n > 1) f *= n;
    ok = ok && oracle_gamma(Rational(n + 1), 128).contains(Rational(f));
  }
  int rec = 0;
  for (const char* s : {"1/3", "1/2", "1", "7/2", "10", "100"}) {
    const Rational x = q(s);
    const Interval r = oracle_lngamma(x + 1, 128) - oracle_lngamma(x, 128) - iv_ln(iv_from_rational(x, 128));
    rec += r.contains_zero();
  }
  const Interval g = oracle_gamma(Rational(1, 2), 128);
  const Interval sqrt_pi = iv_sqrt(iv_const_pi(320));
  const bool half = g.contains(sqrt_pi) && g.relative_width() <= std::ldexp(1.0, -100);
  std::ostringstream os;
  os << "factorials " << (ok ? "ok" : "FAILED") << ", recurrence " << rec << "/6, Gamma(1/2) rel width "
     << g.relative_width();
  return {ok && rec == 6 && half, os.str()};
}

Outcome criterion7() {
  bool ok = true;
  double last = 0;
  for (long x = 1; x <= 16384; x *= 2) {
    const Interval t = theta_probe(Rational(x), 128);
    ok = ok && compare(t.lo(), Rational(3, 10)) > 0 && compare(t.hi(), Rational(1)) < 0;
    last = t.mid_double();
  }
  const Interval t = theta_probe(Rational(16384), 128);
  const bool near = compare(t.lo(), Rational(999, 1000)) > 0;
  std::ostringstream os;
  os << "15 points inside (3/10, 1): " << (ok ? "yes" : "no") << ", theta(2^14) = " << last;
  return {ok && near, os.str()};
}

Outcome criterion8() {
  std::ostringstream os;
  bool ok = true;
  std::map<int, std::vector<Direction>> by_theorem;
  int agree = 0, total = 0;
  for (int theorem = 1; theorem <= 4; ++theorem) {
    for (int k = 0; k <= 3; ++k) {
      if (!theorem_has_depth(theorem, k)) continue;
      const Rational a = theorem_domain_start(theorem, k);
      const InequalityReport r = verify_inequality(theorem, k, make_grid(a, Rational(10000), GridScheme::kLog10, 40), 128);
      bool bounded = true;
      for (const auto& s : r.samples) bounded = bounded && s.precision <= 256;
      const bool good = r.samples.size() == 40 && r.undecided == 0 && !r.mixed && bounded &&
                        r.observed != Direction::kUndecided;
      ok = ok && good;
      by_theorem[theorem].push_back(r.observed);
      ++total;
      agree += r.agrees;
      os << "T" << theorem << "k" << k << " " << direction_name(r.observed) << "/printed " << direction_name(r.printed)
         << (good ? "" : "(!)") << "; ";
    }
  }
  for (int theorem = 1; theorem <= 3; ++theorem) {
    const auto& d = by_theorem[theorem];
    for (std::size_t i = 1; i < d.size(); ++i) ok = ok && d[i] != d[i - 1];
  }
  os << "agreement with printed directions " << agree << "/" << total << " (reported, not asserted)";
  return {ok, os.str()};
}

Outcome criterion9() {
  const ApproximantDef g0 = make_approximant(ApproxFamily::kGosperCF, 0);
  const RationalFunction f2 = second_difference_rational(*g0.constants, 0);
  auto lin = [](long a, long b) { return Polynomial{Rational(a), Rational(b)}; };
  const Polynomial want = Polynomial::identity() * lin(1, 1) * lin(1, 1) * lin(31, 90) * lin(31, 90) * lin(121, 90) *
                          lin(121, 90);
  const bool div = divides(want, f2.den());
  const PositivityCertificate cert = positivity_certificate(f2, Rational(1));
  std::ostringstream os;
  os << "denominator divisible: " << (div ? "yes" : "no") << ", verdict " << verdict_name(cert.verdict)
     << " (reference claims f0'' > 0)";
  return {div && cert.verdict != Verdict::kInconclusive, os.str()};
}

Outcome criterion10() {
  std::mt19937_64 rng(20261018);
  int failures = 0;
  for (int i = 0; i < 50; ++i) {
    const Rational x = Rational(std::uniform_int_distribution<long>(2001, 100000)(rng)) / 1000;
    const Rational lambda = Rational(std::uniform_int_distribution<long>(1001, 10000)(rng)) / 1000;
    const Interval b = tail_sum_bounds(x, lambda, 128);
    const long double xd = x.get_d(), ld = lambda.get_d();
    const long terms = 100000;
    long double s = 0;
    for (long j = terms - 1; j >= 0; --j) s += std::pow(xd + j, -ld);
    const long double lo = s + std::pow(xd + terms, 1 - ld) / (ld - 1);
    const long double hi = s + std::pow(xd + terms - 1, 1 - ld) / (ld - 1);
    if (!(compare(b.lo(), Rational(static_cast<double>(lo))) < 0 && compare(b.hi(), Rational(static_cast<double>(hi))) > 0)) {
      ++failures;
    }
  }
  return {failures == 0, "50 cases, " + std::to_string(failures) + " failures"};
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
  const char* known_gap;  // non-null when the criterion cannot hold as stated
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "exact constants, gosper-cf k<=3", criterion1, nullptr},
      {2, "exact constants, gosper-product / ramanujan-cf / ramanujan-mixed", criterion2, nullptr},
      {3, "signed base series coefficients -1/72 and 17/540", criterion3,
       "the exact expansion of -1 + x ln(1+1/x) + (1/2) ln((x+7/6)/(x+1/6)) has the opposite signs"},
      {4, "scaled difference limit magnitudes", criterion4, nullptr},
      {5, "convergence orders", criterion5, nullptr},
      {6, "oracle correctness", criterion6, nullptr},
      {7, "theta probe", criterion7, nullptr},
      {8, "inequality directions decided and uniform", criterion8, nullptr},
      {9, "proof-skeleton certificate", criterion9, nullptr},
      {10, "tail-sum sandwich", criterion10, nullptr},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << o.detail << "] ("
              << std::round(secs * 100) / 100 << " s)";
    if (!o.pass && c.known_gap) std::cout << " KNOWN GAP: " << c.known_gap;
    std::cout << "\n";
    if (!o.pass && !c.known_gap) ++unexpected;
    if (o.pass && c.known_gap) std::cout << "note: criterion " << c.id << " passed although a gap was expected\n";
  }
  std::cout << (unexpected == 0 ? "acceptance: no unexpected failures\n" : "acceptance: unexpected failures\n");
  return unexpected == 0 ? 0 : 1;
}
