#include "gamma_sharp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "gamma_sharp/error.hpp"

namespace gamma_sharp {

namespace {

Rational round_significant(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
  return parse_rational(buf);
}

}  // namespace

std::vector<Rational> make_grid(const Rational& start, const Rational& stop, GridScheme scheme, int count) {
  if (start <= 0 || stop < start) throw Error(ErrorCode::kUsage, "grid needs 0 < start <= stop");
  std::vector<Rational> out;
  switch (scheme) {
    case GridScheme::kLinear: {
      if (count <= 0) count = 10;
      if (count == 1 || start == stop) return {start};
      for (int i = 0; i < count; ++i) out.push_back(start + (stop - start) * Rational(i) / (count - 1));
      break;
    }
    case GridScheme::kLog10: {
      const double decades = std::log10(Rational(stop / start).get_d());
      if (count <= 0) count = static_cast<int>(std::lround(decades * 10)) + 1;
      if (count == 1 || start == stop) return {start};
      out.push_back(start);
      for (int i = 1; i + 1 < count; ++i) {
        const double v = start.get_d() * std::pow(10.0, decades * i / (count - 1));
        out.push_back(round_significant(v, 4));
      }
      out.push_back(stop);
      break;
    }
    case GridScheme::kPow2: {
      for (Rational v = start; v <= stop; v *= 2) {
        out.push_back(v);
        if (count > 0 && static_cast<int>(out.size()) >= count) break;
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> parse_grid(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1) return {parse_rational(parts[0])};
  if (parts.size() < 3 || parts.size() > 4) throw Error(ErrorCode::kUsage, "grid must be start:stop:scheme[:count]");
  GridScheme scheme;
  if (parts[2] == "linear") {
    scheme = GridScheme::kLinear;
  } else if (parts[2] == "log10") {
    scheme = GridScheme::kLog10;
  } else if (parts[2] == "pow2") {
    scheme = GridScheme::kPow2;
  } else {
    throw Error(ErrorCode::kUsage, "unknown grid scheme '" + parts[2] + "'");
  }
  int count = 0;
  if (parts.size() == 4) {
    try {
      count = std::stoi(parts[3]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kUsage, "bad grid count '" + parts[3] + "'");
    }
    if (count < 1 || count > 100000) throw Error(ErrorCode::kUsage, "grid count out of range");
  }
  return make_grid(parse_rational(parts[0]), parse_rational(parts[1]), scheme, count);
}

}  // namespace gamma_sharp
