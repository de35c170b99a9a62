#include "gamma_sharp/json_io.hpp"

#include <algorithm>

namespace gamma_sharp {

namespace {

int digits_for(Precision p) { return std::clamp(static_cast<int>(static_cast<double>(p) * 0.30103) + 2, 17, 400); }

Json json_of_poly(const Polynomial& p) {
  Json coeffs = Json::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(json_of(p.coefficient(i)));
  return coeffs;
}

Json json_of_sample(const InequalitySample& s) {
  return {{"x", json_of(s.x)},
          {"direction", direction_name(s.direction)},
          {"margin", json_of(s.margin)},
          {"precision", s.precision}};
}

}  // namespace

Json json_of(const Rational& q) { return to_string(q); }

Json json_of(const Interval& iv) {
  const int d = digits_for(iv.precision());
  return {{"lo", render_directed(iv.lo(), d, false)},
          {"hi", render_directed(iv.hi(), d, true)},
          {"width", render_directed(iv.width(), 3, true)}};
}

Json json_of(const AsymptoticSeries& s) {
  Json terms = Json::array();
  for (int m = s.min_order(); m <= s.trunc_order(); ++m) {
    const Rational c = s.coefficient(m);
    if (c != 0) terms.push_back({{"order", m}, {"coefficient", json_of(c)}});
  }
  return {{"terms", terms}, {"truncation", s.trunc_order()}};
}

Json json_of(const CorrectionSpec& spec) {
  Json levels = Json::array();
  for (const CorrectionLevel& level : spec.levels) {
    Json l = {{"attachment", level.attachment == Attachment::kNested ? "nested" : "summed"},
              {"denominatorBase", to_string(level.denom_base)},
              {level.kappa_name, level.kappa ? json_of(*level.kappa) : Json(nullptr)}};
    Json params = Json::array();
    for (const Parameter& prm : level.params) {
      params.push_back({{"name", prm.name}, {"power", prm.power}, {"value", prm.value ? json_of(*prm.value) : Json(nullptr)}});
    }
    l["params"] = params;
    levels.push_back(l);
  }
  return {{"family", family_id(spec.family)}, {"levels", levels}};
}

Json json_of(const DerivationRecord& record) {
  Json levels = Json::array();
  for (const LevelRecord& level : record.levels) {
    Json constants = Json::array();
    for (const SolvedConstant& c : level.constants) {
      constants.push_back({{"name", c.name},
                           {"value", json_of(c.value)},
                           {"targetOrder", c.target_order},
                           {"method", solve_method_name(c.method)}});
    }
    const ResidualLimit lim = residual_limit(record, level.level);
    levels.push_back({{"level", level.level},
                      {"constants", constants},
                      {"survivingOrder", level.surviving_order},
                      {"survivingCoefficient", json_of(level.surviving_coefficient)},
                      {"mu", lim.mu},
                      {"limitMagnitude", json_of(lim.magnitude)}});
  }
  return {{"family", family_id(record.family)},
          {"kMax", record.k_max},
          {"truncation", record.truncation},
          {"baseOrder", record.base_order},
          {"baseCoefficient", json_of(record.base_coefficient)},
          {"levels", levels}};
}

Json json_of(const ApproximantDef& def) {
  Json j = {{"name", def.name()}, {"family", approx_family_name(def.family)}, {"k", def.k},
            {"validDomain", json_of(def.valid_domain)}};
  if (def.constants && def.k >= 0) j["correction"] = to_string(mc_as_rational_function(*def.constants, def.k));
  return j;
}

Json json_of(const ResidualSample& s) { return {{"x", json_of(s.x)}, {"E", json_of(s.E)}, {"relE", json_of(s.relE)}}; }

Json json_of(const RateReport& r) {
  Json samples = Json::array();
  for (const RateSample& s : r.samples) {
    samples.push_back({{"x", json_of(s.x)}, {"f", json_of(s.f)}, {"scaled", json_of(s.scaled)}, {"scaledE", json_of(s.scaled_e)}});
  }
  return {{"approximant", r.approximant},
          {"lambda", r.lambda},
          {"precision", r.precision},
          {"seriesOrder", r.series_order},
          {"lExact", json_of(r.l_exact)},
          {"limitExpected", r.limit_expected ? json_of(*r.limit_expected) : Json(nullptr)},
          {"lEstimate", json_of(r.l_estimate)},
          {"limitCheck", json_of(r.limit_check)},
          {"lRelativeError", r.l_relative_error},
          {"limitRelativeError", r.limit_relative_error},
          {"muEstimate", r.mu_estimate},
          {"converged", r.converged},
          {"samples", samples}};
}

Json json_of(const OrderFit& f) {
  Json samples = Json::array();
  for (const auto& [x, e] : f.samples) samples.push_back({{"x", json_of(x)}, {"E", json_of(e)}});
  return {{"approximant", f.approximant}, {"mu", f.mu}, {"expected", f.expected}, {"samples", samples}};
}

Json json_of(const InequalityReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back(json_of_sample(s));
  return {{"theorem", r.theorem},
          {"k", r.k},
          {"approximant", r.approximant},
          {"domainStart", json_of(r.domain_start)},
          {"printedDirection", direction_name(r.printed)},
          {"observedDirection", direction_name(r.observed)},
          {"mixed", r.mixed},
          {"undecided", r.undecided},
          {"agrees", r.agrees},
          {"samples", samples}};
}

Json json_of(const ThresholdProbe& t) {
  Json samples = Json::array();
  for (const auto& s : t.samples) samples.push_back(json_of_sample(s));
  return {{"theorem", t.theorem},
          {"k", t.k},
          {"printedStart", json_of(t.printed_start)},
          {"empiricalStart", t.empirical_start ? json_of(*t.empirical_start) : Json(nullptr)},
          {"samples", samples}};
}

Json json_of(const PositivityCertificate& c) {
  return {{"target", {{"numerator", to_string(c.target.num())}, {"denominator", to_string(c.target.den())}}},
          {"shift", json_of(c.shift)},
          {"numeratorShifted", json_of_poly(c.numerator_shifted)},
          {"denominatorShifted", json_of_poly(c.denominator_shifted)},
          {"denominatorPositive", c.denominator_positive},
          {"verdict", verdict_name(c.verdict)}};
}

Json json_of(const Conclusion& c) {
  return {{"eSign", c.e_sign}, {"direction", direction_name(c.direction)}, {"chain", c.chain}};
}

Json json_of(const LnGammaMethod& m) {
  return {{"shift", m.shift}, {"cutoff", m.cutoff}, {"terms", m.terms}, {"workingPrecision", m.working}};
}

Json json_of(const DiscrepancyReport& r) {
  Json constants = Json::array();
  for (const auto& c : r.constants) {
    constants.push_back({{"family", c.family}, {"name", c.name}, {"printed", json_of(c.printed)},
                         {"derived", json_of(c.derived)}, {"agrees", c.agrees}});
  }
  Json series = Json::array();
  for (const auto& s : r.series) {
    series.push_back({{"quantity", s.quantity}, {"printed", json_of(s.printed)}, {"derived", json_of(s.derived)},
                      {"magnitudeAgrees", s.magnitude_agrees}, {"signAgrees", s.sign_agrees}});
  }
  Json orders = Json::array();
  for (const auto& o : r.orders) {
    orders.push_back({{"approximant", o.approximant}, {"printed", o.printed}, {"series", o.series},
                      {"fitted", o.fitted}, {"agrees", o.agrees}});
  }
  Json directions = Json::array();
  for (const auto& d : r.directions) {
    directions.push_back({{"theorem", d.theorem},
                          {"k", d.k},
                          {"printed", direction_name(d.printed)},
                          {"observed", direction_name(d.observed)},
                          {"certified", direction_name(d.certified)},
                          {"certificate", verdict_name(d.certificate)},
                          {"printedSecondDifferenceSign", d.printed_f2_sign},
                          {"agrees", d.agrees}});
  }
  Json inequalities = Json::array();
  for (const auto& i : r.inequalities) inequalities.push_back(json_of(i));
  Json probes = Json::array();
  for (const auto& t : r.probes) probes.push_back(json_of(t));
  return {{"constantsAgree", r.constants_agree}, {"allAgree", r.all_agree}, {"constants", constants},
          {"series", series}, {"orders", orders}, {"directions", directions},
          {"inequalities", inequalities}, {"thresholdProbes", probes}};
}

}  // namespace gamma_sharp
