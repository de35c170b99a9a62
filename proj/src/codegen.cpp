#include <sstream>

#include "gamma_sharp/embedded.hpp"

namespace gamma_sharp {

std::string emit_constants_source(const std::vector<DerivationRecord>& records) {
  std::ostringstream os;
  os << "// Generated by `gamma_sharp constants --emit-cpp`; do not edit by hand.\n";
  os << "// Regenerate and diff with tests/test_embedded.cpp if the derivation changes.\n";
  for (const auto& r : records) {
    os << "{Family::k";
    switch (r.family) {
      case Family::kGosperCF: os << "GosperCF"; break;
      case Family::kGosperProduct: os << "GosperProduct"; break;
      case Family::kRamanujanCF: os << "RamanujanCF"; break;
      case Family::kRamanujanMixed: os << "RamanujanMixed"; break;
    }
    os << ",\n {\n";
    for (const auto& level : r.levels) {
      os << "  {";
      for (std::size_t i = 0; i < level.constants.size(); ++i) {
        os << (i ? ", " : "") << '"' << to_string(level.constants[i].value) << '"';
      }
      os << "},\n";
    }
    os << " }},\n";
  }
  return os.str();
}

}  // namespace gamma_sharp
