#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace goi {

// 12 significant digits; infinity prints as "inf".
inline std::string format_decimal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string format_bool(bool b) { return b ? "true" : "false"; }

}  // namespace goi
