#pragma once

#include <string>
#include <vector>

namespace strainwig::cli {

struct SweepRow {
  double epsilon = 0.0;
  double a = 0.0;
  double b = 0.0;
  double zeta = 0.0;
  double vf_eff = 0.0;
};

struct SweepSeries {
  std::string direction;
  std::vector<SweepRow> rows;
};

/// Three stacked panels: a and b, zeta, and vf_eff against epsilon.
void write_sweep_svg(const std::vector<SweepSeries>& series, const std::string& path);

}  // namespace strainwig::cli
