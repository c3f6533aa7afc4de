#ifndef KOPTMIX_FORMAT_HPP
#define KOPTMIX_FORMAT_HPP

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace koptmix {

// All user-facing numeric output goes through these: 10 significant
// digits, locale-independent.
inline std::string format_sig(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

// Nearest double to the 10-significant-digit decimal rendering of v.
inline double round_sig(double v, int digits = 10) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

}  // namespace koptmix

#endif
