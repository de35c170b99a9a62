#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gamma_sharp/approximant.hpp"
#include "gamma_sharp/interval.hpp"
#include "gamma_sharp/rational_function.hpp"

namespace gamma_sharp {

// Enclosure of sum_{j>=0} (x+j)^-lambda: [1/((l-1) x^(l-1)), 1/((l-1)(x-1)^(l-1))].
Interval tail_sum_bounds(const Rational& x, const Rational& lambda, Precision p = kDefaultPrecision);

struct RateSample {
  Rational x;
  Interval f;        // E(x) - E(x+1)
  Interval scaled;   // x^lambda f(x)
  Interval scaled_e; // x^(lambda-1) E(x)
};

struct RateReport {
  std::string approximant;
  int lambda = 0;
  Precision precision = 0;
  int series_order = 0;         // order of the first surviving difference coefficient
  Rational l_exact;             // coefficient of x^-lambda in the exact difference series
  std::optional<Rational> limit_expected;  // l_exact / (lambda - 1)
  Interval l_estimate;          // Richardson step on x^lambda f over the last two points
  Interval limit_check;         // Richardson step on x^(lambda-1) E over the last two points
  double l_relative_error = 0;      // |l_estimate - l_exact| / |l_exact|
  double limit_relative_error = 0;  // against |l_exact| / (lambda - 1), by magnitude
  double mu_estimate = 0;       // -d ln|E| / d ln x over the last two points
  bool converged = false;
  std::vector<RateSample> samples;
};

// grid: increasing, at least two points, min >= 10. Throws kWidthExceeded
// when an enclosure cannot separate the estimate from zero at p.
RateReport mortici_estimate(const ApproximantDef& def, int lambda, const std::vector<Rational>& grid,
                            Precision p = kDefaultPrecision);

struct OrderFit {
  std::string approximant;
  double mu = 0;        // negated least-squares slope of ln|E| against ln x
  int expected = 0;     // first surviving series order - 1
  std::vector<std::pair<Rational, Interval>> samples;
};

// grid spans at least two decades.
OrderFit order_fit(const ApproximantDef& def, const std::vector<Rational>& grid, Precision p = kDefaultPrecision);

// LT: Gamma(x+1) < A(x). GT: Gamma(x+1) > A(x).
enum class Direction { kLT, kGT, kUndecided };
std::string_view direction_name(Direction d);

struct InequalitySample {
  Rational x;
  Direction direction = Direction::kUndecided;
  Interval margin;      // ln Gamma(x+1) - ln A(x)
  Precision precision;  // after escalation
};

struct InequalityReport {
  int theorem = 0;
  int k = 0;
  std::string approximant;
  Rational domain_start;
  Direction printed = Direction::kUndecided;
  Direction observed = Direction::kUndecided;
  bool mixed = false;   // decided samples disagree with each other
  int undecided = 0;
  bool agrees = false;
  std::vector<InequalitySample> samples;
};

// Theorem ids 1..4 map to gosper-cf, gosper-product, ramanujan-cf and
// ramanujan-mixed (k = 1 only).
ApproximantDef theorem_approximant(int theorem, int k);
Rational theorem_domain_start(int theorem, int k);
Direction printed_direction(int theorem, int k);
bool theorem_has_depth(int theorem, int k);

// Every grid point must be >= the theorem's domain start (kDomain otherwise).
// Undecided samples are retried once at 2p.
InequalityReport verify_inequality(int theorem, int k, const std::vector<Rational>& grid,
                                   Precision p = kDefaultPrecision);

struct ThresholdProbe {
  int theorem = 0;
  int k = 0;
  Rational printed_start;
  std::vector<InequalitySample> samples;     // integers 1 .. printed_start + 5
  std::optional<Rational> empirical_start;   // first sample from which all later ones match the printed direction
};

ThresholdProbe probe_domain_start(int theorem, int k, Precision p = kDefaultPrecision);

// Exact f''(x) for f = E(x) - E(x+1) with levels 0..k active (k = -1: MC = 0).
RationalFunction second_difference_rational(const CorrectionSpec& spec, int k);

enum class Verdict { kAllNonneg, kAllNonpos, kInconclusive };
std::string_view verdict_name(Verdict v);

struct PositivityCertificate {
  RationalFunction target;
  Rational shift;
  Polynomial numerator_shifted;
  Polynomial denominator_shifted;
  bool denominator_positive = false;
  Verdict verdict = Verdict::kInconclusive;
};

PositivityCertificate positivity_certificate(const RationalFunction& rf, const Rational& a);

struct Conclusion {
  int e_sign = 0;  // +1, -1, or 0 when undecided
  Direction direction = Direction::kUndecided;
  std::vector<std::string> chain;
};

// Telescoping argument from the sign of f'' on [a, inf), using f, f' -> 0.
Conclusion telescoping_conclusion(const PositivityCertificate& cert);

struct ConstantRow {
  std::string family;
  std::string name;
  Rational printed;
  Rational derived;
  bool agrees = false;
};

struct SeriesRow {
  std::string quantity;
  Rational printed;
  Rational derived;
  bool magnitude_agrees = false;
  bool sign_agrees = false;
};

struct OrderRow {
  std::string approximant;
  int printed = 0;
  int series = 0;
  double fitted = 0;
  bool agrees = false;
};

struct DirectionRow {
  int theorem = 0;
  int k = 0;
  Direction printed = Direction::kUndecided;
  Direction observed = Direction::kUndecided;
  Direction certified = Direction::kUndecided;
  Verdict certificate = Verdict::kInconclusive;
  int printed_f2_sign = 0;  // reference sign for f''
  bool agrees = false;
};

struct ReportOptions {
  Precision precision = kDefaultPrecision;
  int grid_points = 40;
  Rational grid_stop{10000};
  bool certificates = true;
  bool probes = true;
};

struct DiscrepancyReport {
  std::vector<ConstantRow> constants;
  std::vector<SeriesRow> series;
  std::vector<OrderRow> orders;
  std::vector<DirectionRow> directions;
  std::vector<InequalityReport> inequalities;
  std::vector<ThresholdProbe> probes;
  bool constants_agree = false;
  bool all_agree = false;
};

DiscrepancyReport discrepancy_report(const ReportOptions& options = {});

}  // namespace gamma_sharp
