#include "gamma_sharp/approximant.hpp"

#include "gamma_sharp/embedded.hpp"
#include "gamma_sharp/error.hpp"
#include "gamma_sharp/oracle.hpp"

namespace gamma_sharp {

namespace {

constexpr ApproxFamily kAllFamilies[] = {
    ApproxFamily::kStirling,      ApproxFamily::kBurnside,       ApproxFamily::kGosper,
    ApproxFamily::kRamanujanBase, ApproxFamily::kGosperCF,       ApproxFamily::kGosperProduct,
    ApproxFamily::kRamanujanCF,   ApproxFamily::kRamanujanMixed1,
};

}  // namespace

std::string_view approx_family_name(ApproxFamily f) {
  switch (f) {
    case ApproxFamily::kStirling: return "stirling";
    case ApproxFamily::kBurnside: return "burnside";
    case ApproxFamily::kGosper: return "gosper";
    case ApproxFamily::kRamanujanBase: return "ramanujan-base";
    case ApproxFamily::kGosperCF: return "gosper-cf";
    case ApproxFamily::kGosperProduct: return "gosper-product";
    case ApproxFamily::kRamanujanCF: return "ramanujan-cf";
    case ApproxFamily::kRamanujanMixed1: return "ramanujan-mixed";
  }
  return "?";
}

std::optional<ApproxFamily> parse_approx_family(std::string_view name) {
  for (ApproxFamily f : kAllFamilies) {
    if (name == approx_family_name(f)) return f;
  }
  if (name == "ramanujan-mixed1" || name == "RAMANUJAN_MIXED1") return ApproxFamily::kRamanujanMixed1;
  if (auto fam = parse_family(name)) {
    switch (*fam) {
      case Family::kGosperCF: return ApproxFamily::kGosperCF;
      case Family::kGosperProduct: return ApproxFamily::kGosperProduct;
      case Family::kRamanujanCF: return ApproxFamily::kRamanujanCF;
      case Family::kRamanujanMixed: return ApproxFamily::kRamanujanMixed1;
    }
  }
  return std::nullopt;
}

bool is_corrected(ApproxFamily f) {
  return f == ApproxFamily::kGosperCF || f == ApproxFamily::kGosperProduct || f == ApproxFamily::kRamanujanCF ||
         f == ApproxFamily::kRamanujanMixed1;
}

std::optional<Family> correction_family(ApproxFamily f) {
  switch (f) {
    case ApproxFamily::kGosper:
    case ApproxFamily::kGosperCF: return Family::kGosperCF;
    case ApproxFamily::kGosperProduct: return Family::kGosperProduct;
    case ApproxFamily::kRamanujanBase:
    case ApproxFamily::kRamanujanCF: return Family::kRamanujanCF;
    case ApproxFamily::kRamanujanMixed1: return Family::kRamanujanMixed;
    default: return std::nullopt;
  }
}

std::string ApproximantDef::name() const {
  std::string n(approx_family_name(family));
  if (is_corrected(family)) n += "(" + std::to_string(k) + ")";
  return n;
}

Rational cf_approximant(const std::vector<CorrectionLevel>& levels, int n, const Rational& x) {
  n = std::min(n, static_cast<int>(levels.size()) - 1);
  Rational total(0);
  Rational tail(0);
  for (int i = n; i >= 0; --i) {
    const auto& level = levels[static_cast<std::size_t>(i)];
    if (!level.kappa) throw Error(ErrorCode::kUnresolvedUnknown, level.kappa_name + " is unknown");
    const Rational d = level.denominator()(x) + tail;
    if (d == 0) throw Error(ErrorCode::kPole, "correction has a pole at x = " + to_string(x));
    tail = *level.kappa / d;
    if (level.attachment == Attachment::kSummed || i == 0) {
      total += tail;
      tail = 0;
    }
  }
  return total;
}

Rational correction_value(const ApproximantDef& def, const Rational& x) {
  if (!def.constants || def.k < 0) return Rational(0);
  return cf_approximant(def.constants->levels, def.k, x);
}

bool pole_free_from(const ApproximantDef& def, const Rational& a) {
  if (!def.constants || def.k < 0) return true;
  const RationalFunction mc = mc_as_rational_function(*def.constants, def.k);
  const Polynomial& den = mc.den();
  if (den(a) == 0) return false;
  // Descartes on the shifted denominator settles most cases; Sturm otherwise.
  if (sign_variations(taylor_shift(den, a)) == 0) return true;
  return count_roots_above(den, a) == 0;
}

ApproximantDef make_approximant(ApproxFamily family, int k, CorrectionSpec constants) {
  ApproximantDef def;
  def.family = family;
  def.k = is_corrected(family) ? k : -1;
  if (is_corrected(family)) {
    if (k < 0 || k >= static_cast<int>(constants.levels.size())) {
      throw Error(ErrorCode::kUsage, std::string(approx_family_name(family)) + " has no depth " + std::to_string(k));
    }
    if (!constants.solved(k)) throw Error(ErrorCode::kUnresolvedUnknown, "constants are not solved");
  }
  if (family == ApproxFamily::kRamanujanMixed1 && k != 1) {
    throw Error(ErrorCode::kUsage, "ramanujan-mixed is defined for k = 1 only");
  }
  def.constants = std::move(constants);
  if (family == ApproxFamily::kGosperProduct && k == 0) def.valid_domain = 13;
  if (family == ApproxFamily::kGosperProduct && k == 2) def.valid_domain = 6;
  if (!pole_free_from(def, def.valid_domain)) {
    throw Error(ErrorCode::kPole, def.name() + " has a pole on [" + to_string(def.valid_domain) + ", inf)");
  }
  return def;
}

ApproximantDef make_approximant(ApproxFamily family, int k) {
  if (auto fam = correction_family(family)) {
    CorrectionSpec spec = make_solved_spec(*fam, embedded_constants(*fam));
    if (!is_corrected(family)) k = -1;
    if (family == ApproxFamily::kRamanujanMixed1 && k < 0) k = 1;
    return make_approximant(family, k, std::move(spec));
  }
  return make_approximant(family, -1, CorrectionSpec{Family::kGosperCF, {}, {}});
}

std::vector<ApproximantDef> all_approximants() {
  std::vector<ApproximantDef> out;
  for (ApproxFamily f : {ApproxFamily::kStirling, ApproxFamily::kBurnside, ApproxFamily::kGosper,
                         ApproxFamily::kRamanujanBase}) {
    out.push_back(make_approximant(f));
  }
  for (ApproxFamily f : {ApproxFamily::kGosperCF, ApproxFamily::kGosperProduct, ApproxFamily::kRamanujanCF}) {
    for (int k = 0; k <= 3; ++k) out.push_back(make_approximant(f, k));
  }
  out.push_back(make_approximant(ApproxFamily::kRamanujanMixed1, 1));
  return out;
}

namespace {

Interval half(Precision w) { return iv_from_rational(Rational(1, 2), w); }

Interval ln_rational(const Rational& q, Precision w) {
  if (q <= 0) throw Error(ErrorCode::kDomain, "logarithm of non-positive value " + to_string(q));
  return iv_ln(iv_from_rational(q, w));
}

}  // namespace

Interval log_approx(const ApproximantDef& def, const Rational& x, Precision p) {
  if (x <= 0) throw Error(ErrorCode::kDomain, "approximants need x > 0");
  const Precision w = p + 32;
  const Interval xi = iv_from_rational(x, w);
  const Interval ln_x = ln_rational(x, w);
  const Interval half_ln_2pi = iv_mul(half(w), iv_ln(iv_mul(iv_from_int(2, w), iv_const_pi(w))));
  // x (ln x - 1)
  const Interval power_part = iv_mul(xi, iv_sub(ln_x, iv_from_int(1, w)));
  const Rational mc = correction_value(def, x);
  const Rational sixth(1, 6);
  const Rational cubic = 8 * x * x * x + 4 * x * x + x + Rational(1, 30);

  switch (def.family) {
    case ApproxFamily::kStirling:
      return half_ln_2pi + power_part + iv_mul(half(w), ln_x);
    case ApproxFamily::kBurnside: {
      const Rational y = x + Rational(1, 2);
      const Interval yi = iv_from_rational(y, w);
      return half_ln_2pi + iv_mul(yi, iv_sub(ln_rational(y, w), iv_from_int(1, w)));
    }
    case ApproxFamily::kGosper:
    case ApproxFamily::kGosperCF:
      return half_ln_2pi + power_part + iv_mul(half(w), ln_rational(x + sixth + mc, w));
    case ApproxFamily::kGosperProduct:
      return half_ln_2pi + power_part + iv_mul(half(w), ln_rational(x + sixth, w)) - ln_rational(1 + mc, w);
    case ApproxFamily::kRamanujanBase:
    case ApproxFamily::kRamanujanCF:
    case ApproxFamily::kRamanujanMixed1:
      return iv_mul(half(w), iv_ln(iv_const_pi(w))) + power_part +
             iv_mul(iv_from_rational(sixth, w), ln_rational(cubic + mc, w));
  }
  throw Error(ErrorCode::kDomain, "unknown approximant family");
}

Interval eval_approx(const ApproximantDef& def, const Rational& x, Precision p) {
  return iv_exp(log_approx(def, x, p));
}

ResidualSample residual(const ApproximantDef& def, const Rational& x, Precision p) {
  Interval e = iv_sub(oracle_lngamma(x + 1, p), log_approx(def, x, p));
  Interval rel = iv_sub(iv_exp(e), iv_from_int(1, e.precision()));
  return ResidualSample{x, std::move(e), std::move(rel)};
}

AsymptoticSeries difference_series(const ApproximantDef& def, int n) {
  switch (def.family) {
    case ApproxFamily::kStirling: {
      // ln A = 1/2 ln 2pi + 1/2 ln x + x(ln x - 1)
      return series_add(series_base_difference(n),
                        series_scale(series_log_ratio_shift(RationalFunction(Polynomial::identity()), n),
                                     Rational(1, 2)));
    }
    case ApproxFamily::kBurnside: {
      // D = (x+3/2) ln(1+3/(2x)) - (x+1/2) ln(1+1/(2x)) - ln(1+1/x) - 1; the
      // ln x parts cancel.
      const int m = n + 1;
      auto linear_log = [&](const Rational& c) {
        return series_mul(series_of_polynomial(Polynomial{c, Rational(1)}, m), series_log1p_linear(c, m));
      };
      AsymptoticSeries d = series_sub(linear_log(Rational(3, 2)), linear_log(Rational(1, 2)));
      d = series_sub(d, series_log1p_linear(Rational(1), m));
      d = series_sub(d, AsymptoticSeries(0, {Rational(1)}, m));
      return d.truncated(n);
    }
    default: {
      const Family fam = *correction_family(def.family);
      const CorrectionSpec spec = def.constants ? *def.constants : make_template(fam, 0);
      return expand_difference(spec, def.k, n);
    }
  }
}

}  // namespace gamma_sharp
