#include "gamma_sharp/correction.hpp"

#include <algorithm>

#include "gamma_sharp/error.hpp"

namespace gamma_sharp {

std::string_view family_id(Family f) {
  switch (f) {
    case Family::kGosperCF: return "GOSPER_CF";
    case Family::kGosperProduct: return "GOSPER_PRODUCT";
    case Family::kRamanujanCF: return "RAMANUJAN_CF";
    case Family::kRamanujanMixed: return "RAMANUJAN_MIXED";
  }
  return "?";
}

std::string_view family_cli_name(Family f) {
  switch (f) {
    case Family::kGosperCF: return "gosper-cf";
    case Family::kGosperProduct: return "gosper-product";
    case Family::kRamanujanCF: return "ramanujan-cf";
    case Family::kRamanujanMixed: return "ramanujan-mixed";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kGosperCF, Family::kGosperProduct, Family::kRamanujanCF, Family::kRamanujanMixed}) {
    if (name == family_id(f) || name == family_cli_name(f)) return f;
  }
  return std::nullopt;
}

std::string_view solve_method_name(SolveMethod m) {
  return m == SolveMethod::kAffine ? "affine-solved" : "polynomial-solved";
}

bool CorrectionLevel::solved() const {
  return kappa.has_value() &&
         std::all_of(params.begin(), params.end(), [](const Parameter& p) { return p.value.has_value(); });
}

Polynomial CorrectionLevel::denominator() const {
  Polynomial d = denom_base;
  for (const auto& p : params) {
    if (!p.value) throw Error(ErrorCode::kUnresolvedUnknown, "parameter " + p.name + " is unknown");
    d += Polynomial::monomial(*p.value, p.power);
  }
  return d;
}

bool CorrectionSpec::solved(int depth) const {
  for (int i = 0; i <= depth && i < static_cast<int>(levels.size()); ++i) {
    if (!levels[static_cast<std::size_t>(i)].solved()) return false;
  }
  return true;
}

int max_published_depth(Family family) { return family == Family::kRamanujanMixed ? 1 : 3; }

namespace {

const Rational kSixth(1, 6);

CorrectionLevel simple_level(std::string kappa_name, std::string lambda_name) {
  CorrectionLevel level;
  level.kappa_name = std::move(kappa_name);
  level.denom_base = Polynomial::identity();
  level.params.push_back(Parameter{std::move(lambda_name), 0, std::nullopt});
  return level;
}

Polynomial ramanujan_cubic() {
  return Polynomial{Rational(1, 30), Rational(1), Rational(4), Rational(8)};
}

}  // namespace

CorrectionSpec make_template(Family family, int k_max) {
  if (k_max < 0) throw Error(ErrorCode::kUsage, "k_max must be non-negative");
  CorrectionSpec spec{family, {}, {}};
  switch (family) {
    case Family::kGosperCF:
      for (int j = 0; j <= k_max; ++j) {
        spec.levels.push_back(simple_level("kappa" + std::to_string(j), "lambda" + std::to_string(j)));
      }
      spec.log_terms = {{Rational(1, 2), LogArgument::kGosperRoot}};
      break;
    case Family::kGosperProduct:
      for (int j = 0; j <= k_max; ++j) {
        CorrectionLevel level = simple_level("kappa" + std::to_string(j), "lambda" + std::to_string(j));
        if (j == 0) {
          // (x + 23/90)^2 + lambda0; the shift is part of the definition.
          level.denom_base = power(Polynomial{Rational(23, 90), Rational(1)}, 2);
        }
        spec.levels.push_back(std::move(level));
      }
      // Correction divides the Gosper formula: ln A = ... - ln(1 + MC).
      spec.log_terms = {{Rational(1, 2), LogArgument::kGosperFixed}, {Rational(-1), LogArgument::kOnePlusMC}};
      break;
    case Family::kRamanujanCF:
      for (int j = 0; j <= k_max; ++j) {
        spec.levels.push_back(simple_level("a" + std::to_string(j), "b" + std::to_string(j)));
      }
      spec.log_terms = {{Rational(1, 6), LogArgument::kRamanujanCubic}};
      break;
    case Family::kRamanujanMixed: {
      if (k_max > 1) throw Error(ErrorCode::kUsage, "RAMANUJAN_MIXED has levels 0 and 1 only");
      spec.levels.push_back(simple_level("kappa0", "lambda0"));
      if (k_max == 1) {
        CorrectionLevel cubic;
        cubic.kappa_name = "kappa1";
        cubic.denom_base = Polynomial::monomial(Rational(1), 3);
        cubic.params = {{"lambda10", 2, std::nullopt}, {"lambda11", 1, std::nullopt}, {"lambda12", 0, std::nullopt}};
        cubic.attachment = Attachment::kSummed;
        spec.levels.push_back(std::move(cubic));
      }
      spec.log_terms = {{Rational(1, 6), LogArgument::kRamanujanCubic}};
      break;
    }
  }
  return spec;
}

CorrectionSpec make_solved_spec(Family family, const std::vector<std::vector<Rational>>& level_values) {
  CorrectionSpec spec = make_template(family, static_cast<int>(level_values.size()) - 1);
  for (std::size_t i = 0; i < level_values.size(); ++i) {
    auto& level = spec.levels[i];
    const auto& v = level_values[i];
    if (static_cast<int>(v.size()) != level.unknown_count()) {
      throw Error(ErrorCode::kUsage, "level " + std::to_string(i) + " expects " +
                                         std::to_string(level.unknown_count()) + " constants");
    }
    level.kappa = v[0];
    for (std::size_t j = 0; j < level.params.size(); ++j) level.params[j].value = v[j + 1];
  }
  return spec;
}

RationalFunction mc_as_rational_function(const CorrectionSpec& spec, int k) {
  k = std::min(k, static_cast<int>(spec.levels.size()) - 1);
  RationalFunction total;
  // Walk backwards: a nested level wraps the tail built so far; a summed
  // level closes its chain, which is added to the total.
  RationalFunction tail;
  for (int i = k; i >= 0; --i) {
    const auto& level = spec.levels[static_cast<std::size_t>(i)];
    if (!level.kappa) throw Error(ErrorCode::kUnresolvedUnknown, level.kappa_name + " is unknown");
    RationalFunction den = RationalFunction(level.denominator()) + tail;
    tail = RationalFunction::constant(*level.kappa) / den;
    if (level.attachment == Attachment::kSummed || i == 0) {
      total += tail;
      tail = RationalFunction();
    }
  }
  return total;
}

RationalFunction log_argument(const CorrectionSpec& spec, LogArgument arg, int k) {
  switch (arg) {
    case LogArgument::kGosperFixed:
      return RationalFunction(Polynomial{kSixth, Rational(1)});
    case LogArgument::kGosperRoot:
      return RationalFunction(Polynomial{kSixth, Rational(1)}) + mc_as_rational_function(spec, k);
    case LogArgument::kOnePlusMC:
      return RationalFunction::constant(Rational(1)) + mc_as_rational_function(spec, k);
    case LogArgument::kRamanujanCubic:
      return RationalFunction(ramanujan_cubic()) + mc_as_rational_function(spec, k);
  }
  throw Error(ErrorCode::kDomain, "unknown log argument");
}

AsymptoticSeries expand_difference(const CorrectionSpec& spec, int k, int n) {
  if (n < 1) throw Error(ErrorCode::kDomain, "truncation order must be positive");
  AsymptoticSeries d = series_base_difference(n);
  for (const auto& term : spec.log_terms) {
    d = series_add(d, series_scale(series_log_ratio_shift(log_argument(spec, term.argument, k), n), term.prefactor));
  }
  return d;
}

AsymptoticSeries expand_difference(const CorrectionSpec& spec, int n) {
  return expand_difference(spec, static_cast<int>(spec.levels.size()) - 1, n);
}

namespace {

int default_truncation(int k_max) { return 2 * k_max + 10; }

Rational& slot_value(CorrectionSpec& spec, UnknownId id, std::optional<Rational>*& holder) {
  auto& level = spec.levels.at(static_cast<std::size_t>(id.level));
  holder = id.slot == 0 ? &level.kappa : &level.params.at(static_cast<std::size_t>(id.slot - 1)).value;
  if (!holder->has_value()) *holder = Rational(0);
  return **holder;
}

std::string unknown_name(const CorrectionSpec& spec, UnknownId id) {
  const auto& level = spec.levels.at(static_cast<std::size_t>(id.level));
  return id.slot == 0 ? level.kappa_name : level.params.at(static_cast<std::size_t>(id.slot - 1)).name;
}

// Evaluates D with the unknown set to u; nullopt when the trial is degenerate.
class TrialExpander {
 public:
  TrialExpander(const CorrectionSpec& spec, UnknownId id, int n) : work_(spec), id_(id), n_(n) {
    work_.levels.resize(static_cast<std::size_t>(id.level) + 1);
    auto& level = work_.levels.back();
    // Later unknowns in the same level are held at zero.
    for (int s = id.slot + 1; s < level.unknown_count(); ++s) {
      std::optional<Rational>* h = nullptr;
      slot_value(work_, UnknownId{id.level, s}, h);
    }
    if (!work_.solved(id.level - 1)) {
      throw Error(ErrorCode::kUnresolvedUnknown, "earlier levels must be solved before " + unknown_name(spec, id));
    }
    for (int s = 0; s < id.slot; ++s) {
      const auto& lv = work_.levels.back();
      const bool known = s == 0 ? lv.kappa.has_value() : lv.params[static_cast<std::size_t>(s - 1)].value.has_value();
      if (!known) {
        throw Error(ErrorCode::kUnresolvedUnknown,
                    unknown_name(spec, UnknownId{id.level, s}) + " must be solved before " + unknown_name(spec, id));
      }
    }
  }

  std::optional<AsymptoticSeries> operator()(const Rational& u) {
    std::optional<Rational>* holder = nullptr;
    slot_value(work_, id_, holder);
    *holder = u;
    ++evaluations_;
    try {
      return expand_difference(work_, id_.level, n_);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  int evaluations() const { return evaluations_; }

 private:
  CorrectionSpec work_;
  UnknownId id_;
  int n_;
  int evaluations_ = 0;
};

struct Sample {
  Rational u;
  AsymptoticSeries series;
};

// Polynomial through (u_i, c_i) by Newton divided differences.
Polynomial interpolate(const std::vector<Rational>& us, const std::vector<Rational>& cs) {
  const std::size_t n = us.size();
  std::vector<Rational> dd = cs;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (us[i] - us[i - j]);
    }
  }
  Polynomial p = Polynomial::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    p = p * Polynomial::linear_factor(us[i]) + Polynomial::constant(dd[i]);
  }
  return p;
}

}  // namespace

SolveOutcome solve_next_unknown(const CorrectionSpec& spec, UnknownId id, const SolverOptions& options) {
  const int n = options.truncation > 0 ? options.truncation
                                       : default_truncation(static_cast<int>(spec.levels.size()) - 1);
  const std::string name = unknown_name(spec, id);
  TrialExpander expand(spec, id, n);

  // Trial points 0, 1, 2, ..., skipping degenerate ones.
  std::vector<Sample> samples;
  long next_trial = 0;
  auto add_sample = [&]() {
    for (int guard = 0; guard < 64; ++guard, ++next_trial) {
      Rational u(next_trial);
      if (auto s = expand(u)) {
        samples.push_back({u, std::move(*s)});
        ++next_trial;
        return;
      }
    }
    throw Error(ErrorCode::kNoRationalRoot, "no usable trial values for " + name);
  };
  for (int i = 0; i < 3; ++i) add_sample();

  // Target: lowest order whose coefficient is not identically zero over the trials.
  int target = n + 1;
  for (const auto& s : samples) target = std::min(target, s.series.leading_order());
  if (target > n) {
    throw Error(ErrorCode::kTruncation, "no coefficient of D depends on " + name + " through order " + std::to_string(n));
  }
  auto coeff_at = [&](const Sample& s) { return s.series.coefficient(target); };

  auto confirms = [&](const Rational& root) {
    auto s = expand(root);
    return s && s->leading_order() > target;
  };

  const Rational c0 = coeff_at(samples[0]);
  const Rational c1 = coeff_at(samples[1]);
  const Rational c2 = coeff_at(samples[2]);
  const Rational slope01 = (c1 - c0) / (samples[1].u - samples[0].u);
  const Rational slope12 = (c2 - c1) / (samples[2].u - samples[1].u);
  if (slope01 == slope12) {
    if (slope01 == 0) {
      throw Error(ErrorCode::kNoRationalRoot,
                  "coefficient of x^-" + std::to_string(target) + " does not depend on " + name);
    }
    Rational root = samples[0].u - c0 / slope01;
    if (confirms(root)) return {root, target, SolveMethod::kAffine, expand.evaluations()};
  }

  // Fallback: exact interpolation of c(u), one extra point to bound the degree.
  const int cap = options.interpolation_cap;
  while (static_cast<int>(samples.size()) < cap + 2) add_sample();
  std::vector<Rational> us;
  std::vector<Rational> cs;
  for (int i = 0; i <= cap; ++i) {
    us.push_back(samples[static_cast<std::size_t>(i)].u);
    cs.push_back(coeff_at(samples[static_cast<std::size_t>(i)]));
  }
  Polynomial c = interpolate(us, cs);
  const auto& check = samples[static_cast<std::size_t>(cap + 1)];
  if (c(check.u) != coeff_at(check)) {
    throw Error(ErrorCode::kNonlinearUnresolved,
                "coefficient of x^-" + std::to_string(target) + " is not a polynomial of degree <= " +
                    std::to_string(cap) + " in " + name);
  }
  std::optional<Rational> best;
  for (const Rational& r : rational_roots(c)) {
    if (confirms(r) && (!best || abs(r) < abs(*best))) best = r;
  }
  if (!best) {
    throw Error(ErrorCode::kNoRationalRoot,
                "coefficient of x^-" + std::to_string(target) + " has no rational root in " + name);
  }
  return {*best, target, SolveMethod::kPolynomial, expand.evaluations()};
}

DerivationRecord derive_family(Family family, int k_max, const DeriveOptions& options) {
  if (k_max < 0) throw Error(ErrorCode::kUsage, "k must be non-negative");
  if (k_max > max_published_depth(family) && (!options.experimental || family == Family::kRamanujanMixed)) {
    throw Error(ErrorCode::kUsage, std::string(family_cli_name(family)) + " supports k <= " +
                                       std::to_string(max_published_depth(family)));
  }
  const int n = options.truncation > 0 ? options.truncation : default_truncation(k_max);
  CorrectionSpec spec = make_template(family, k_max);
  SolverOptions solver{n, options.interpolation_cap};

  DerivationRecord record{family, k_max, n, 0, Rational(0), {}, spec};
  {
    AsymptoticSeries base = expand_difference(spec, -1, n);
    record.base_order = base.leading_order();
    record.base_coefficient = base.is_zero() ? Rational(0) : base.coefficient(base.leading_order());
  }

  for (int k = 0; k <= k_max; ++k) {
    LevelRecord lr;
    lr.level = k;
    auto& level = spec.levels[static_cast<std::size_t>(k)];
    for (int slot = 0; slot < level.unknown_count(); ++slot) {
      UnknownId id{k, slot};
      SolveOutcome out;
      try {
        out = solve_next_unknown(spec, id, solver);
      } catch (const Error& e) {
        throw Error(e.code(), "level " + std::to_string(k) + ", unknown " + unknown_name(spec, id) + ": " + e.what());
      }
      if (slot == 0) {
        level.kappa = out.value;
      } else {
        level.params[static_cast<std::size_t>(slot - 1)].value = out.value;
      }
      lr.constants.push_back({unknown_name(spec, id), out.value, out.target_order, out.method});
    }
    AsymptoticSeries d = expand_difference(spec, k, n);
    lr.surviving_order = d.leading_order();
    if (d.is_zero()) {
      throw Error(ErrorCode::kTruncation, "level " + std::to_string(k) +
                                              ": no surviving coefficient through order " + std::to_string(n));
    }
    lr.surviving_coefficient = d.coefficient(lr.surviving_order);
    record.levels.push_back(std::move(lr));
  }
  record.spec = std::move(spec);
  return record;
}

ResidualLimit residual_limit(const DerivationRecord& record, int k) {
  int order = 0;
  Rational l;
  if (k < 0) {
    order = record.base_order;
    l = record.base_coefficient;
  } else {
    if (k >= static_cast<int>(record.levels.size())) {
      throw Error(ErrorCode::kDomain, "level " + std::to_string(k) + " not derived");
    }
    order = record.levels[static_cast<std::size_t>(k)].surviving_order;
    l = record.levels[static_cast<std::size_t>(k)].surviving_coefficient;
  }
  if (l == 0 || order > record.truncation) {
    throw Error(ErrorCode::kTruncation, "surviving coefficient vanishes at the truncation order; increase N");
  }
  if (order < 2) throw Error(ErrorCode::kDomain, "limit estimate needs lambda > 1");
  Rational mag = abs(l) / (order - 1);
  return ResidualLimit{order, order - 1, l, mag};
}

}  // namespace gamma_sharp
