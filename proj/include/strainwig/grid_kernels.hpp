#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "strainwig/phase_space.hpp"

namespace strainwig {

/// Threads used by the parallel kernels (no-op without OpenMP).
void set_num_threads(int n);
int max_threads();

/// Evaluates eval(PhaseSpacePoint) -> Matrix2c at every node. Rows are
/// distributed over OpenMP threads; each node is written by exactly one
/// thread so the result does not depend on the thread count.
template <class Eval>
void fill_field(WignerField& field, Eval&& eval) {
  const GridSpec g = field.grid;
  const FieldFrame frame = field.meta.frame;
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.npx; ++j)
      field.set(i, j, eval(PhaseSpacePoint::physical(g.x(i), g.px(j), frame)));
  }
}

/// Reference serial fill, same node order and arithmetic.
template <class Eval>
void fill_field_serial(WignerField& field, Eval&& eval) {
  const GridSpec g = field.grid;
  const FieldFrame frame = field.meta.frame;
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.npx; ++j)
      field.set(i, j, eval(PhaseSpacePoint::physical(g.x(i), g.px(j), frame)));
  }
}

namespace detail {

struct RowStats {
  double min_trace = std::numeric_limits<double>::infinity();
  double max_trace = -std::numeric_limits<double>::infinity();
  int argmax_j = 0;
  double sum = 0.0;
  double herm = 0.0;
  double diag_imag = 0.0;
};

RowStats row_stats(const WignerField& f, int i);
FieldStats combine(const WignerField& f, const std::vector<RowStats>& rows);

}  // namespace detail

/// Per-row partials reduced in row order, so parallel and serial results
/// are bit-identical.
FieldStats field_stats(const WignerField& f);
FieldStats field_stats_serial(const WignerField& f);

}  // namespace strainwig
