#include <utility>

#include "gamma_sharp/embedded.hpp"
#include "gamma_sharp/error.hpp"

namespace gamma_sharp {

namespace {

struct EmbeddedFamily {
  Family family;
  std::vector<std::vector<std::string>> levels;
};

const std::vector<EmbeddedFamily>& table() {
  static const std::vector<EmbeddedFamily> t = {
#include "embedded_constants.inc"
  };
  return t;
}

}  // namespace

const std::vector<std::vector<std::string>>& embedded_constant_strings(Family family) {
  for (const auto& e : table()) {
    if (e.family == family) return e.levels;
  }
  throw Error(ErrorCode::kDomain, "no embedded constants for " + std::string(family_id(family)));
}

std::vector<std::vector<Rational>> embedded_constants(Family family) {
  std::vector<std::vector<Rational>> out;
  for (const auto& level : embedded_constant_strings(family)) {
    std::vector<Rational> v;
    for (const auto& s : level) v.push_back(parse_rational(s));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace gamma_sharp
