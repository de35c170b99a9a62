#pragma once

#include <string>
#include <vector>

#include "gamma_sharp/correction.hpp"

namespace gamma_sharp {

// Constants produced by derive_family at the published depth, compiled in
// from src/embedded_constants.inc. Per level: kappa, then params in solve
// order.
const std::vector<std::vector<std::string>>& embedded_constant_strings(Family family);
std::vector<std::vector<Rational>> embedded_constants(Family family);

// Source text of embedded_constants.inc for the given records.
std::string emit_constants_source(const std::vector<DerivationRecord>& records);

}  // namespace gamma_sharp
