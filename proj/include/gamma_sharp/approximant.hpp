#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamma_sharp/correction.hpp"
#include "gamma_sharp/interval.hpp"

namespace gamma_sharp {

enum class ApproxFamily {
  kStirling,
  kBurnside,
  kGosper,
  kRamanujanBase,
  kGosperCF,
  kGosperProduct,
  kRamanujanCF,
  kRamanujanMixed1,
};

std::string_view approx_family_name(ApproxFamily f);  // "stirling", "gosper-cf", ...
std::optional<ApproxFamily> parse_approx_family(std::string_view name);
bool is_corrected(ApproxFamily f);
// Correction family backing a corrected (or Gosper / Ramanujan base) formula.
std::optional<Family> correction_family(ApproxFamily f);

// One concrete formula for Gamma(x+1).
struct ApproximantDef {
  ApproxFamily family = ApproxFamily::kStirling;
  int k = -1;                              // correction depth, -1 for base formulas
  std::optional<CorrectionSpec> constants; // solved, at least levels 0..k
  Rational valid_domain{1};

  std::string name() const;  // e.g. "gosper-cf(2)"
};

// Uses the embedded (generated) constants. Verifies the correction has no
// pole on [valid_domain, inf) and throws kPole otherwise.
ApproximantDef make_approximant(ApproxFamily family, int k = -1);
ApproximantDef make_approximant(ApproxFamily family, int k, CorrectionSpec constants);

// Every formula the CLI `table` command lists: bases plus each corrected depth.
std::vector<ApproximantDef> all_approximants();

// Exact value of the depth-n truncation of the correction at x, by backward
// recurrence (n = -1 or no levels gives 0). Summed levels start a new chain.
Rational cf_approximant(const std::vector<CorrectionLevel>& levels, int n, const Rational& x);

// Exact MC_k(x) for the definition (0 for base formulas).
Rational correction_value(const ApproximantDef& def, const Rational& x);

// True when the collapsed MC denominator has no root on [a, inf).
bool pole_free_from(const ApproximantDef& def, const Rational& a);

// ln A(x) and A(x) as enclosures.
Interval log_approx(const ApproximantDef& def, const Rational& x, Precision p);
Interval eval_approx(const ApproximantDef& def, const Rational& x, Precision p);

struct ResidualSample {
  Rational x;
  Interval E;     // ln Gamma(x+1) - ln A(x)
  Interval relE;  // exp(E) - 1
};

ResidualSample residual(const ApproximantDef& def, const Rational& x, Precision p);

// Exact series of E(x) - E(x+1) through order n for any definition.
AsymptoticSeries difference_series(const ApproximantDef& def, int n);

}  // namespace gamma_sharp
