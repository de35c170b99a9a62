#pragma once

#include <string_view>
#include <vector>

#include "gamma_sharp/rational.hpp"

namespace gamma_sharp {

enum class GridScheme { kLinear, kLog10, kPow2 };

// "start:stop:scheme[:count]". linear: `count` evenly spaced points (default
// 10); log10: `count` geometric points (default 10 per decade + 1), interior
// points rounded to 4 significant digits; pow2: start * 2^i up to stop.
// Every point is an exact rational; endpoints are kept exactly.
std::vector<Rational> parse_grid(std::string_view text);
std::vector<Rational> make_grid(const Rational& start, const Rational& stop, GridScheme scheme, int count = 0);

}  // namespace gamma_sharp
