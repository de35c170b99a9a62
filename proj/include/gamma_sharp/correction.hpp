#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamma_sharp/series.hpp"

namespace gamma_sharp {

enum class Family { kGosperCF, kGosperProduct, kRamanujanCF, kRamanujanMixed };

std::string_view family_id(Family f);          // "GOSPER_CF", ...
std::string_view family_cli_name(Family f);    // "gosper-cf", ...
std::optional<Family> parse_family(std::string_view name);  // accepts either spelling

enum class Attachment {
  kNested,  // continued-fraction tail inside the previous level's denominator
  kSummed,  // sibling fraction added to everything before it
};

// One coefficient added to a level's fixed denominator: value * x^power.
struct Parameter {
  std::string name;
  int power = 0;
  std::optional<Rational> value;  // nullopt while unknown
};

// kappa / (denom_base(x) + sum params + [nested tail]).
struct CorrectionLevel {
  std::string kappa_name;
  std::optional<Rational> kappa;
  Polynomial denom_base;          // fixed monic part: x, x^3, (x + 23/90)^2
  std::vector<Parameter> params;  // highest power first (solve order)
  Attachment attachment = Attachment::kNested;

  bool solved() const;
  int unknown_count() const { return 1 + static_cast<int>(params.size()); }
  Polynomial denominator() const;  // throws kUnresolvedUnknown
};

enum class LogArgument {
  kGosperRoot,       // x + 1/6 + MC(x)
  kGosperFixed,      // x + 1/6
  kOnePlusMC,        // 1 + MC(x)
  kRamanujanCubic,   // 8x^3 + 4x^2 + x + 1/30 + MC(x)
};

// prefactor * ln(A(x+1)/A(x))
struct LogTerm {
  Rational prefactor;
  LogArgument argument;
};

// D(x) = E(x) - E(x+1) = -1 + x ln(1 + 1/x) + sum of log terms.
struct CorrectionSpec {
  Family family;
  std::vector<CorrectionLevel> levels;
  std::vector<LogTerm> log_terms;

  bool solved(int depth) const;
};

// Unsolved template with levels 0..k_max.
CorrectionSpec make_template(Family family, int k_max);

// Levels 0..k collapsed into one reduced rational function (k = -1 gives 0).
RationalFunction mc_as_rational_function(const CorrectionSpec& spec, int k);

// The rational argument of a log term with levels 0..k active.
RationalFunction log_argument(const CorrectionSpec& spec, LogArgument arg, int k);

// Exact series of D(x) through order n, levels 0..k active (k = -1: MC = 0).
AsymptoticSeries expand_difference(const CorrectionSpec& spec, int k, int n);
AsymptoticSeries expand_difference(const CorrectionSpec& spec, int n);

struct UnknownId {
  int level = 0;
  int slot = 0;  // 0: kappa, i >= 1: params[i - 1]
};

enum class SolveMethod { kAffine, kPolynomial };
std::string_view solve_method_name(SolveMethod m);

struct SolveOutcome {
  Rational value;
  int target_order = 0;
  SolveMethod method = SolveMethod::kAffine;
  int evaluations = 0;
};

struct SolverOptions {
  int truncation = 0;          // 0: default 2*k_max + 10
  int interpolation_cap = 4;   // max degree accepted by the fallback
};

// Finds the rational value of `id` that annihilates the lowest coefficient it
// controls. Unknowns after `id` are held at 0; levels deeper than id.level are
// inactive.
SolveOutcome solve_next_unknown(const CorrectionSpec& spec, UnknownId id, const SolverOptions& options = {});

struct SolvedConstant {
  std::string name;
  Rational value;
  int target_order = 0;
  SolveMethod method = SolveMethod::kAffine;
};

struct LevelRecord {
  int level = 0;
  std::vector<SolvedConstant> constants;
  int surviving_order = 0;           // first nonzero order of D with levels 0..level
  Rational surviving_coefficient;    // its coefficient (signed)
};

struct DerivationRecord {
  Family family;
  int k_max = 0;
  int truncation = 0;
  int base_order = 0;                // MC = 0
  Rational base_coefficient;
  std::vector<LevelRecord> levels;
  CorrectionSpec spec;               // fully solved
};

struct DeriveOptions {
  int truncation = 0;  // 0: default 2*k_max + 10
  int interpolation_cap = 4;
  bool experimental = false;  // allow k_max beyond the published depth
};

int max_published_depth(Family family);

DerivationRecord derive_family(Family family, int k_max, const DeriveOptions& options = {});

struct ResidualLimit {
  int order = 0;          // lambda: order of the first surviving difference coefficient
  int mu = 0;             // lambda - 1
  Rational coefficient;   // signed l
  Rational magnitude;     // |l| / (lambda - 1)
};

// k = -1 reports the uncorrected base formula.
ResidualLimit residual_limit(const DerivationRecord& record, int k);

// Solved spec built from literal constants, in the template's unknown order
// (kappa, params...) per level.
CorrectionSpec make_solved_spec(Family family, const std::vector<std::vector<Rational>>& level_values);

}  // namespace gamma_sharp
