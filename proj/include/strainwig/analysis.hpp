#pragma once

#include <functional>
#include <vector>

#include "strainwig/grid_kernels.hpp"
#include "strainwig/wigner_core.hpp"

namespace strainwig {

/// Per-field summary row used by the evolve command.
struct TraceSummary {
  double t_prime = 0.0;
  double max_trace = 0.0;
  double min_trace = 0.0;
  double argmax_x = 0.0;
  double argmax_px = 0.0;
  double argmax_xi = 0.0;
  double argmax_sp = 0.0;
  double argmax_angle = 0.0;  // atan2(sp, xi), radians in (-pi, pi]
  double argmax_radius = 0.0;
  double trace_integral = 0.0;
};

TraceSummary summarize(const WignerField& f);

/// Continuous angle sequence (adds multiples of 2 pi between neighbours).
std::vector<double> unwrap_angles(const std::vector<double>& raw);

using PointEvaluator = std::function<Matrix2c(const PhaseSpacePoint&)>;

/// max |Tr W_a(px, x) - Tr W_b(x, px)| / max |Tr W_b| over `grid`, where
/// the two evaluators live in their own frames. Zero when the fields are
/// mirror images under the x <-> px exchange.
double axis_swap_difference(const PointEvaluator& eval_a, const FieldFrame& frame_a,
                            const PointEvaluator& eval_b, const FieldFrame& frame_b,
                            const GridSpec& grid);

}  // namespace strainwig
