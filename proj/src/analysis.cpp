#include "gamma_sharp/analysis.hpp"

#include <cmath>
#include <map>

#include "gamma_sharp/error.hpp"
#include "gamma_sharp/grid.hpp"
#include "gamma_sharp/oracle.hpp"

namespace gamma_sharp {

namespace {

Interval exact_pow_interval(const Rational& x, const Rational& e, Precision w) {
  if (e.get_den() == 1 && e >= 0 && e <= 100000) {
    return iv_from_rational(pow(x, static_cast<unsigned int>(e.get_num().get_ui())), w);
  }
  return iv_pow(iv_from_rational(x, w), iv_from_rational(e, w));
}

Rational rational_pow_int(const Rational& x, int e) {
  return e >= 0 ? pow(x, static_cast<unsigned int>(e)) : 1 / pow(x, static_cast<unsigned int>(-e));
}

void require_increasing(const std::vector<Rational>& grid, std::size_t min_points) {
  if (grid.size() < min_points) {
    throw Error(ErrorCode::kUsage, "grid needs at least " + std::to_string(min_points) + " points");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) throw Error(ErrorCode::kUsage, "grid must be strictly increasing");
  }
}

Interval richardson(const Rational& x1, const Interval& g1, const Rational& x2, const Interval& g2, Precision w) {
  const Interval a = iv_mul(iv_from_rational(x2, w), g2);
  const Interval b = iv_mul(iv_from_rational(x1, w), g1);
  return iv_div(iv_sub(a, b), iv_from_rational(x2 - x1, w));
}

double relative_error(const Interval& estimate, const Rational& target) {
  if (target == 0) return std::fabs(estimate.mid_double());
  return std::fabs(estimate.mid_double() - target.get_d()) / std::fabs(target.get_d());
}

int first_surviving_order(const ApproximantDef& def) {
  const AsymptoticSeries s = difference_series(def, 24);
  if (s.is_zero()) throw Error(ErrorCode::kTruncation, def.name() + " has no surviving order below 24");
  return s.leading_order();
}

}  // namespace

Interval tail_sum_bounds(const Rational& x, const Rational& lambda, Precision p) {
  if (!(x > 2)) throw Error(ErrorCode::kDomain, "tail bounds need x > 2");
  if (!(lambda > 1)) throw Error(ErrorCode::kDomain, "tail bounds need lambda > 1");
  const Precision w = p + 16;
  const Rational m = lambda - 1;
  const Interval lo = iv_div(iv_from_int(1, w), iv_mul(iv_from_rational(m, w), exact_pow_interval(x, m, w)));
  const Interval hi = iv_div(iv_from_int(1, w), iv_mul(iv_from_rational(m, w), exact_pow_interval(x - 1, m, w)));
  return Interval(lo.lo(), hi.hi());
}

RateReport mortici_estimate(const ApproximantDef& def, int lambda, const std::vector<Rational>& grid, Precision p) {
  require_increasing(grid, 2);
  if (grid.front() < 10) throw Error(ErrorCode::kDomain, "rate grid must start at x >= 10");
  if (lambda < 2) throw Error(ErrorCode::kUsage, "lambda must be at least 2");
  const Precision w = p + 16;

  RateReport report{def.name(), lambda, p, 0, Rational(0), std::nullopt,
                    iv_from_int(0, w), iv_from_int(0, w), 0, 0, 0, false, {}};
  const AsymptoticSeries series = difference_series(def, lambda + 2);
  report.series_order = series.is_zero() ? lambda + 3 : series.leading_order();
  report.l_exact = series.coefficient(lambda);
  report.limit_expected = report.l_exact / (lambda - 1);

  for (const Rational& x : grid) {
    const Interval e0 = residual(def, x, p).E;
    const Interval e1 = residual(def, x + 1, p).E;
    const Interval f = iv_sub(e0, e1);
    if (f.contains_zero() || f.relative_width() > 1e-6) {
      throw Error(ErrorCode::kWidthExceeded, "E(x) - E(x+1) unresolved at x = " + to_string(x) + " with p = " +
                                                 std::to_string(p) + "; raise the precision");
    }
    report.samples.push_back({x, f, iv_mul(f, iv_from_rational(rational_pow_int(x, lambda), w)),
                              iv_mul(e0, iv_from_rational(rational_pow_int(x, lambda - 1), w))});
  }

  const std::size_t n = report.samples.size();
  const RateSample& s1 = report.samples[n - 2];
  const RateSample& s2 = report.samples[n - 1];
  report.l_estimate = richardson(s1.x, s1.scaled, s2.x, s2.scaled, w);
  report.limit_check = richardson(s1.x, s1.scaled_e, s2.x, s2.scaled_e, w);
  report.l_relative_error = relative_error(report.l_estimate, report.l_exact);
  report.limit_relative_error = relative_error(iv_abs(report.limit_check), abs(*report.limit_expected));

  const double e1 = std::fabs(s1.scaled_e.mid_double()) / std::pow(s1.x.get_d(), lambda - 1);
  const double e2 = std::fabs(s2.scaled_e.mid_double()) / std::pow(s2.x.get_d(), lambda - 1);
  report.mu_estimate = -std::log(e2 / e1) / std::log(s2.x.get_d() / s1.x.get_d());

  if (n >= 3) {
    const RateSample& s0 = report.samples[n - 3];
    const Interval prev = richardson(s0.x, s0.scaled, s1.x, s1.scaled, w);
    const double a = report.l_estimate.mid_double();
    const double b = prev.mid_double();
    report.converged = a != 0 && std::fabs(a - b) <= 0.01 * std::fabs(a);
  }
  return report;
}

OrderFit order_fit(const ApproximantDef& def, const std::vector<Rational>& grid, Precision p) {
  require_increasing(grid, 2);
  if (grid.back() < 100 * grid.front()) throw Error(ErrorCode::kUsage, "order fit grid must span two decades");
  OrderFit fit{def.name(), 0, first_surviving_order(def) - 1, {}};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const Rational& x : grid) {
    Interval e = residual(def, x, p).E;
    if (e.contains_zero() || e.relative_width() > 1e-6) {
      throw Error(ErrorCode::kWidthExceeded,
                  "E unresolved at x = " + to_string(x) + " with p = " + std::to_string(p) + "; raise the precision");
    }
    const double lx = std::log(x.get_d());
    const BigFloat mid = iv_abs(e).mid();
    long exp2 = 0;
    const double mant = mpfr_get_d_2exp(&exp2, mid.get(), MPFR_RNDN);
    const double ly = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    fit.samples.emplace_back(x, std::move(e));
  }
  const double n = static_cast<double>(grid.size());
  fit.mu = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
  return fit;
}

std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::kLT: return "LT";
    case Direction::kGT: return "GT";
    case Direction::kUndecided: return "UNDECIDED";
  }
  return "?";
}

bool theorem_has_depth(int theorem, int k) {
  if (theorem >= 1 && theorem <= 3) return k >= 0 && k <= 3;
  return theorem == 4 && k == 1;
}

ApproximantDef theorem_approximant(int theorem, int k) {
  if (!theorem_has_depth(theorem, k)) {
    throw Error(ErrorCode::kUsage, "theorem " + std::to_string(theorem) + " has no case k = " + std::to_string(k));
  }
  switch (theorem) {
    case 1: return make_approximant(ApproxFamily::kGosperCF, k);
    case 2: return make_approximant(ApproxFamily::kGosperProduct, k);
    case 3: return make_approximant(ApproxFamily::kRamanujanCF, k);
    default: return make_approximant(ApproxFamily::kRamanujanMixed1, 1);
  }
}

Rational theorem_domain_start(int theorem, int k) { return theorem_approximant(theorem, k).valid_domain; }

Direction printed_direction(int theorem, int k) {
  if (!theorem_has_depth(theorem, k)) throw Error(ErrorCode::kUsage, "no such theorem case");
  const bool even = k % 2 == 0;
  switch (theorem) {
    case 1: return even ? Direction::kGT : Direction::kLT;
    case 2:
    case 3: return even ? Direction::kLT : Direction::kGT;
    default: return Direction::kLT;
  }
}

namespace {

InequalitySample compare_at(const ApproximantDef& def, const Rational& x, Precision p, bool escalate) {
  for (Precision q = p;; q *= 2) {
    const Interval ln_gamma = oracle_lngamma(x + 1, q);
    const Interval ln_a = log_approx(def, x, q);
    Direction d = Direction::kUndecided;
    if (disjoint(ln_gamma, ln_a)) d = compare(ln_gamma.lo(), ln_a.hi()) > 0 ? Direction::kGT : Direction::kLT;
    if (d != Direction::kUndecided || !escalate || q >= 2 * p) {
      return {x, d, iv_sub(ln_gamma, ln_a), q};
    }
  }
}

}  // namespace

InequalityReport verify_inequality(int theorem, int k, const std::vector<Rational>& grid, Precision p) {
  const ApproximantDef def = theorem_approximant(theorem, k);
  require_increasing(grid, 1);
  if (grid.front() < def.valid_domain) {
    throw Error(ErrorCode::kDomain, "x = " + to_string(grid.front()) + " is below the domain start " +
                                        to_string(def.valid_domain) + " of theorem " + std::to_string(theorem));
  }
  InequalityReport report;
  report.theorem = theorem;
  report.k = k;
  report.approximant = def.name();
  report.domain_start = def.valid_domain;
  report.printed = printed_direction(theorem, k);
  bool seen_lt = false, seen_gt = false;
  for (const Rational& x : grid) {
    InequalitySample s = compare_at(def, x, p, true);
    if (s.direction == Direction::kUndecided) ++report.undecided;
    seen_lt |= s.direction == Direction::kLT;
    seen_gt |= s.direction == Direction::kGT;
    report.samples.push_back(std::move(s));
  }
  report.mixed = seen_lt && seen_gt;
  if (!report.mixed && report.undecided == 0) report.observed = seen_lt ? Direction::kLT : Direction::kGT;
  report.agrees = report.observed == report.printed;
  return report;
}

ThresholdProbe probe_domain_start(int theorem, int k, Precision p) {
  const ApproximantDef def = theorem_approximant(theorem, k);
  ThresholdProbe probe;
  probe.theorem = theorem;
  probe.k = k;
  probe.printed_start = def.valid_domain;
  const Direction printed = printed_direction(theorem, k);
  const long last = def.valid_domain.get_num().get_si() / def.valid_domain.get_den().get_si() + 5;
  for (long x = 1; x <= last; ++x) {
    if (!pole_free_from(def, Rational(x))) continue;
    probe.samples.push_back(compare_at(def, Rational(x), p, true));
  }
  for (auto it = probe.samples.rbegin(); it != probe.samples.rend() && it->direction == printed; ++it) {
    probe.empirical_start = it->x;
  }
  return probe;
}

RationalFunction second_difference_rational(const CorrectionSpec& spec, int k) {
  const Polynomial x = Polynomial::identity();
  const Polynomial x1 = x + Polynomial::constant(Rational(1));
  RationalFunction out(Polynomial::constant(Rational(-1)), x * x1 * x1);
  for (const LogTerm& term : spec.log_terms) {
    const RationalFunction g = log_argument(spec, term.argument, k);
    const RationalFunction h = rf_derivative(rf_derivative(g) / g);
    out += RationalFunction::constant(term.prefactor) * (h.shifted(Rational(1)) - h);
  }
  return out;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kAllNonneg: return "ALL_NONNEG";
    case Verdict::kAllNonpos: return "ALL_NONPOS";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

PositivityCertificate positivity_certificate(const RationalFunction& rf, const Rational& a) {
  PositivityCertificate cert{rf, a, taylor_shift(rf.num(), a), taylor_shift(rf.den(), a)};
  const Polynomial& den = cert.denominator_shifted;
  bool den_ok = den.coefficient(0) > 0;
  for (int i = 0; i <= den.degree(); ++i) den_ok = den_ok && den.coefficient(i) >= 0;
  cert.denominator_positive = den_ok;
  if (!den_ok) return cert;
  bool nonneg = true, nonpos = true;
  for (int i = 0; i <= cert.numerator_shifted.degree(); ++i) {
    const int s = sign(cert.numerator_shifted.coefficient(i));
    nonneg = nonneg && s >= 0;
    nonpos = nonpos && s <= 0;
  }
  if (nonneg) {
    cert.verdict = Verdict::kAllNonneg;
  } else if (nonpos) {
    cert.verdict = Verdict::kAllNonpos;
  }
  return cert;
}

Conclusion telescoping_conclusion(const PositivityCertificate& cert) {
  Conclusion c;
  const std::string dom = "[" + to_string(cert.shift) + ", inf)";
  if (cert.verdict == Verdict::kInconclusive) {
    c.chain.push_back(cert.denominator_positive ? "shifted numerator of f'' has mixed signs"
                                                : "denominator of f'' not certified positive on " + dom);
    c.chain.push_back("sign of E undecided");
    return c;
  }
  if (cert.target.is_zero()) {
    c.chain.push_back("f'' vanishes identically; f is affine and tends to 0, so f = 0 and E = 0");
    return c;
  }
  const bool up = cert.verdict == Verdict::kAllNonneg;
  c.e_sign = up ? 1 : -1;
  c.direction = up ? Direction::kGT : Direction::kLT;
  c.chain = {
      std::string("f'' ") + (up ? ">= 0" : "<= 0") + " on " + dom + " with finitely many zeros",
      std::string("f' strictly ") + (up ? "increasing" : "decreasing") + " on " + dom,
      std::string("f' -> 0, so f' ") + (up ? "< 0" : "> 0"),
      std::string("f strictly ") + (up ? "decreasing" : "increasing") + " on " + dom,
      std::string("f -> 0, so f ") + (up ? "> 0" : "< 0"),
      std::string("E(x) = sum f(x+j) ") + (up ? "> 0" : "< 0") + ", so Gamma(x+1) " + (up ? ">" : "<") + " A(x)",
  };
  return c;
}

namespace {

// Reference values as printed, per family in solve order.
const std::map<Family, std::vector<const char*>>& printed_constants() {
  static const std::map<Family, std::vector<const char*>> table = {
      {Family::kGosperCF,
       {"1/72", "31/90", "5929/32400", "481937/3735270", "76899172249/248039857296",
        "7745462509019287/19149278075101482", "786873417270631211749921/851541507731717527392144",
        "2098335745817751685364201067279071/30311088872486921466334781589254970"}},
      {Family::kGosperProduct,
       {"-1/144", "4007/21600", "4394/637875", "130311599/15575040", "7894414898425/119793516544",
        "-265702682899837009577/34427631789478287360",
        "1897560849252106177858465792/77174813342532578267347147395",
        "30320380455616293004898928163131563244811979/6134364315672065325746652708240298034227200"}},
      {Family::kRamanujanCF,
       {"-11/240", "79/154", "459733/711480", "-1455925/70798882", "49600874140433/101450127018720",
        "10259108965771635091/19545564575317443762",
        "169085305336152527131511003963/101221579151797375403194730976",
        "-6141448535908002711219920016488834171/203275987838924050801436670299517447102"}},
      {Family::kRamanujanMixed,
       {"-11/240", "79/154", "459733/15523200", "71181889/70798882", "717183502490887/520777318696096",
        "1118629052995381153799/1958878792277282473920"}},
  };
  return table;
}

// Reference sign of f'' per theorem and depth (0: none given).
int printed_f2_sign(int theorem, int k) {
  if (theorem == 4) return 0;
  const bool even = k % 2 == 0;
  if (theorem == 3) return even ? -1 : 1;
  return even ? 1 : -1;
}

int printed_mu(ApproxFamily f, int k) {
  switch (f) {
    case ApproxFamily::kGosperCF: return 2 * k + 4;
    case ApproxFamily::kGosperProduct: return 2 * k + 5;
    case ApproxFamily::kRamanujanCF: return 2 * k + 6;
    default: return 10;
  }
}

SeriesRow series_row(std::string quantity, const char* printed, const Rational& derived) {
  SeriesRow row{std::move(quantity), parse_rational(printed), derived};
  row.magnitude_agrees = abs(row.printed) == abs(row.derived);
  row.sign_agrees = row.printed == row.derived;
  return row;
}

}  // namespace

DiscrepancyReport discrepancy_report(const ReportOptions& options) {
  DiscrepancyReport report;
  const Precision p = options.precision;

  report.constants_agree = true;
  for (Family fam : {Family::kGosperCF, Family::kGosperProduct, Family::kRamanujanCF, Family::kRamanujanMixed}) {
    const DerivationRecord rec = derive_family(fam, max_published_depth(fam));
    const auto& printed = printed_constants().at(fam);
    std::size_t i = 0;
    for (const LevelRecord& level : rec.levels) {
      for (const SolvedConstant& c : level.constants) {
        ConstantRow row{std::string(family_cli_name(fam)), c.name,
                        i < printed.size() ? parse_rational(printed[i]) : Rational(0), c.value};
        row.agrees = i < printed.size() && row.printed == row.derived;
        report.constants_agree = report.constants_agree && row.agrees;
        report.constants.push_back(std::move(row));
        ++i;
      }
    }
    if (i != printed.size()) report.constants_agree = false;
  }

  const ApproximantDef gosper = make_approximant(ApproxFamily::kGosper);
  const ApproximantDef gcf0 = make_approximant(ApproxFamily::kGosperCF, 0);
  const ApproximantDef ram = make_approximant(ApproxFamily::kRamanujanBase);
  const AsymptoticSeries gs = difference_series(gosper, 6);
  const AsymptoticSeries g0 = difference_series(gcf0, 7);
  const AsymptoticSeries rs = difference_series(ram, 7);
  report.series.push_back(series_row("gosper difference x^-3", "-1/72", gs.coefficient(3)));
  report.series.push_back(series_row("gosper difference x^-4", "17/540", gs.coefficient(4)));
  report.series.push_back(series_row("gosper-cf(0) difference x^-5", "5929/1166400", g0.coefficient(5)));
  report.series.push_back(series_row("gosper-cf(0) lim x^4 E", "5929/4665600", g0.coefficient(5) / 4));
  report.series.push_back(series_row("ramanujan-base difference x^-5", "11/2880", rs.coefficient(5)));
  report.series.push_back(series_row("ramanujan-base lim x^4 E", "11/11520", rs.coefficient(5) / 4));

  const std::vector<Rational> fit_grid = make_grid(Rational(100), Rational(10000), GridScheme::kLog10, 9);
  for (const ApproximantDef& def : all_approximants()) {
    if (!is_corrected(def.family)) continue;
    const OrderFit fit = order_fit(def, fit_grid, std::max<Precision>(p, 256));
    OrderRow row{def.name(), printed_mu(def.family, def.k), fit.expected, fit.mu};
    row.agrees = row.printed == row.series && std::fabs(row.fitted - row.printed) <= 0.1;
    report.orders.push_back(std::move(row));
  }

  for (int theorem = 1; theorem <= 4; ++theorem) {
    for (int k = 0; k <= 3; ++k) {
      if (!theorem_has_depth(theorem, k)) continue;
      const ApproximantDef def = theorem_approximant(theorem, k);
      const auto grid = make_grid(def.valid_domain, options.grid_stop, GridScheme::kLog10, options.grid_points);
      InequalityReport ineq = verify_inequality(theorem, k, grid, p);
      DirectionRow row{theorem, k, ineq.printed, ineq.observed};
      row.printed_f2_sign = printed_f2_sign(theorem, k);
      if (options.certificates) {
        const auto cert = positivity_certificate(second_difference_rational(*def.constants, k), def.valid_domain);
        row.certificate = cert.verdict;
        row.certified = telescoping_conclusion(cert).direction;
      }
      row.agrees = row.observed == row.printed;
      report.directions.push_back(row);
      report.inequalities.push_back(std::move(ineq));
      if (options.probes && theorem == 2 && k % 2 == 0) report.probes.push_back(probe_domain_start(theorem, k, p));
    }
  }

  report.all_agree = report.constants_agree;
  for (const auto& r : report.series) report.all_agree = report.all_agree && r.magnitude_agrees && r.sign_agrees;
  for (const auto& r : report.orders) report.all_agree = report.all_agree && r.agrees;
  for (const auto& r : report.directions) report.all_agree = report.all_agree && r.agrees;
  return report;
}

}  // namespace gamma_sharp
