#pragma once

#include <iosfwd>

namespace gwex::cli {

struct ShowLawOptions {
  double beta = 100.0;
  double r_max = 3.0;
  int steps = 7;
};

// Prints an aligned table of r, xi(r), log-negativity, (W/hbar w)/n_bar, the
// ratio of the last column to xi, and the predicted low-T deviation band for
// that ratio. Throws ConfigError for beta < 10, steps < 2 or bad r_max.
int run_show_law(const ShowLawOptions& opt, std::ostream& os);

}  // namespace gwex::cli
