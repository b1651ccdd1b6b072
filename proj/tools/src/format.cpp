#include "gwex/cli/format.hpp"

#include <cmath>
#include <cstdio>

namespace gwex::cli {

std::string format_g12(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

}  // namespace gwex::cli
