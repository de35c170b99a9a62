#pragma once

#include <json.hpp>

#include "gamma_sharp/analysis.hpp"
#include "gamma_sharp/correction.hpp"
#include "gamma_sharp/oracle.hpp"

namespace gamma_sharp {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Intervals serialize as {"lo", "hi", "width"} decimal strings with directed
// rounding; rationals as "p/q" strings.
Json json_of(const Rational& q);
Json json_of(const Interval& iv);
Json json_of(const AsymptoticSeries& s);
Json json_of(const CorrectionSpec& spec);
Json json_of(const DerivationRecord& record);
Json json_of(const ApproximantDef& def);
Json json_of(const ResidualSample& s);
Json json_of(const RateReport& r);
Json json_of(const OrderFit& f);
Json json_of(const InequalityReport& r);
Json json_of(const ThresholdProbe& t);
Json json_of(const PositivityCertificate& c);
Json json_of(const Conclusion& c);
Json json_of(const DiscrepancyReport& r);
Json json_of(const LnGammaMethod& m);

}  // namespace gamma_sharp
