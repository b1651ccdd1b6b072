#include "gwex/cli/showlaw.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "gwex/cli/config.hpp"
#include "gwex/cli/format.hpp"
#include "gwex/symplectic.hpp"

namespace gwex::cli {
namespace {

std::string cell(double v, const char* spec) {
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string dash(int width) {
  std::string s(width, ' ');
  s.back() = '-';
  return s;
}

}  // namespace

int run_show_law(const ShowLawOptions& opt, std::ostream& os) {
  if (!(opt.beta >= 10.0) || !std::isfinite(opt.beta)) {
    throw ConfigError("show-law requires beta >= 10 (low-temperature law)");
  }
  if (!(opt.r_max > 0.0) || !std::isfinite(opt.r_max)) {
    throw ConfigError("show-law requires r_max > 0");
  }
  if (opt.steps < 2) {
    throw ConfigError("show-law requires steps >= 2");
  }

  ThermalContext ctx = ThermalContext::from_beta(opt.beta);
  GaussianMeasurement het = GaussianMeasurement::heterodyne();
  os << "# beta_a = " << format_g12(opt.beta)
     << ", n_bar = " << format_g12(ctx.n_bar())
     << "  (W in units of n_bar hbar omega_a; band = predicted |ratio - 1|)\n";
  os << "         r          xi         E_N      w/nbar       ratio        band\n";
  for (int i = 0; i < opt.steps; ++i) {
    double r = opt.r_max * i / (opt.steps - 1);
    double x = xi(r);
    double e_n = log_negativity(build_tms_thermal(ctx.n_bar(), r));
    double w_norm =
        extracted_work_exact(ctx, r, het).w_over_hw / ctx.n_bar();
    os << cell(r, "%12.6f") << cell(x, "%12.8f") << cell(e_n, "%12.6f")
       << cell(w_norm, "%12.8f");
    if (x == 0.0) {
      os << dash(12) << dash(12) << '\n';
      continue;
    }
    // The exact law deviates from W = xi n_bar by the thermal entropy's
    // subleading term: ratio - 1 -> (1 + (1-xi) ln(1-xi)/xi) / beta.
    double band = (1.0 + (1.0 - x) * std::log1p(-x) / x) / opt.beta;
    os << cell(w_norm / x, "%12.8f") << cell(band, "%12.2e") << '\n';
  }
  return 0;
}

}  // namespace gwex::cli
