#include "strainwig/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace strainwig {

TraceSummary summarize(const WignerField& f) {
  const FieldStats s = field_stats(f);
  TraceSummary r;
  r.t_prime = f.meta.t_prime;
  r.max_trace = s.max_trace;
  r.min_trace = s.min_trace;
  r.argmax_x = s.argmax_x;
  r.argmax_px = s.argmax_px;
  r.argmax_xi = f.meta.frame.xi_of_x(s.argmax_x);
  r.argmax_sp = f.meta.frame.sp_of_px(s.argmax_px);
  r.argmax_angle = std::atan2(r.argmax_sp, r.argmax_xi);
  r.argmax_radius = std::hypot(r.argmax_xi, r.argmax_sp);
  r.trace_integral = s.trace_integral;
  return r;
}

std::vector<double> unwrap_angles(const std::vector<double>& raw) {
  std::vector<double> out(raw);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 1; i < out.size(); ++i) {
    double d = raw[i] - raw[i - 1];
    d -= two_pi * std::round(d / two_pi);
    out[i] = out[i - 1] + d;
  }
  return out;
}

double axis_swap_difference(const PointEvaluator& eval_a, const FieldFrame& frame_a,
                            const PointEvaluator& eval_b, const FieldFrame& frame_b,
                            const GridSpec& grid) {
  std::vector<double> diff(grid.size());
  std::vector<double> mag(grid.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.npx; ++j) {
      const double x = grid.x(i);
      const double px = grid.px(j);
      const double tb = eval_b(PhaseSpacePoint::physical(x, px, frame_b)).trace().real();
      const double ta = eval_a(PhaseSpacePoint::physical(px, x, frame_a)).trace().real();
      const std::size_t k = static_cast<std::size_t>(i) * grid.npx + j;
      diff[k] = std::abs(ta - tb);
      mag[k] = std::abs(tb);
    }
  }
  const double scale = *std::max_element(mag.begin(), mag.end());
  const double worst = *std::max_element(diff.begin(), diff.end());
  return scale > 0.0 ? worst / scale : worst;
}

}  // namespace strainwig
