#include "strainwig/grid_kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace strainwig {

void set_num_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

RowStats row_stats(const WignerField& f, int i) {
  RowStats r;
  for (int j = 0; j < f.grid.npx; ++j) {
    const std::size_t k = f.index(i, j);
    const double tr = (f.w11[k] + f.w22[k]).real();
    if (tr < r.min_trace) r.min_trace = tr;
    if (tr > r.max_trace) {
      r.max_trace = tr;
      r.argmax_j = j;
    }
    r.sum += tr;
    r.herm = std::max(r.herm, std::abs(f.w12[k] - std::conj(f.w21[k])));
    r.diag_imag = std::max({r.diag_imag, std::abs(f.w11[k].imag()), std::abs(f.w22[k].imag())});
  }
  return r;
}

FieldStats combine(const WignerField& f, const std::vector<RowStats>& rows) {
  FieldStats s;
  s.min_trace = std::numeric_limits<double>::infinity();
  s.max_trace = -std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    const RowStats& r = rows[i];
    s.min_trace = std::min(s.min_trace, r.min_trace);
    if (r.max_trace > s.max_trace) {
      s.max_trace = r.max_trace;
      s.argmax_i = i;
      s.argmax_j = r.argmax_j;
    }
    total += r.sum;
    s.max_hermiticity_error = std::max(s.max_hermiticity_error, r.herm);
    s.max_diag_imag = std::max(s.max_diag_imag, r.diag_imag);
  }
  s.trace_integral = total * f.grid.dx * f.grid.dpx;
  s.argmax_x = f.grid.x(s.argmax_i);
  s.argmax_px = f.grid.px(s.argmax_j);
  return s;
}

}  // namespace detail

FieldStats field_stats(const WignerField& f) {
  std::vector<detail::RowStats> rows(static_cast<std::size_t>(f.grid.nx));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < f.grid.nx; ++i) rows[i] = detail::row_stats(f, i);
  return detail::combine(f, rows);
}

FieldStats field_stats_serial(const WignerField& f) {
  std::vector<detail::RowStats> rows(static_cast<std::size_t>(f.grid.nx));
  for (int i = 0; i < f.grid.nx; ++i) rows[i] = detail::row_stats(f, i);
  return detail::combine(f, rows);
}

}  // namespace strainwig
