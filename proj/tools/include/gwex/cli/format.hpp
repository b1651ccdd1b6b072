#pragma once

#include <string>

namespace gwex::cli {

// Fixed 12-significant-digit float formatting so identical configs produce
// byte-identical output across platforms. Negative zero collapses to "0";
// non-finite values print as nan/inf/-inf.
std::string format_g12(double v);

}  // namespace gwex::cli
