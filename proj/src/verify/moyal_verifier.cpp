#include "strainwig/verify/moyal_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "strainwig/errors.hpp"
#include "strainwig/wigner_core.hpp"

namespace strainwig::verify {

using oracle::Axis;
using oracle::Derivative;
using oracle::fd_apply;

namespace {

void require_fine(const ScaledField& w) {
  if (w.hu > kMaxSpacing || w.hv > kMaxSpacing) {
    std::ostringstream os;
    os << "grid spacing (" << w.hu << ", " << w.hv << ") exceeds " << kMaxSpacing;
    throw GridTooCoarse(os.str());
  }
}

// Textbook diagonal solution (-1)^n e^{-x/2} L_n(x) / pi, x = |chi|^2, on the p_y = k slice.
ScaledField diagonal_solution(int n, double half_width, int grid_n) {
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sample_scaled(half_width, grid_n, [=](double xi, double s) {
    const double x = 2.0 * (xi * xi + s * s);
    return cplx{sign * std::exp(-0.5 * x) * std::laguerre(static_cast<unsigned>(n), x) *
                    std::numbers::inv_pi,
                0.0};
  });
}

}  // namespace

ScaledField apply_h1(const ScaledField& w, const FieldFrame& frame) {
  require_fine(w);
  const ScaledField dxx = fd_apply(Derivative::Second, w, Axis::U);
  const ScaledField dss = fd_apply(Derivative::Second, w, Axis::V);
  ScaledField out = w.like();
  const double half = 0.5 * frame.omega_B;
  for (int i = 0; i < w.nu; ++i) {
    const double xi = w.u(i);
    for (int j = 0; j < w.nv; ++j) {
      const double s = w.v(j);
      out(i, j) = half * ((s * s + xi * xi) * w(i, j) - 0.25 * dxx(i, j) - 0.25 * dss(i, j));
    }
  }
  return out;
}

ScaledField apply_h2(const ScaledField& w, const FieldFrame& frame) {
  require_fine(w);
  const ScaledField dx = fd_apply(Derivative::First, w, Axis::U);
  const ScaledField ds = fd_apply(Derivative::First, w, Axis::V);
  ScaledField out = w.like();
  const double half = 0.5 * frame.omega_B;
  for (int i = 0; i < w.nu; ++i) {
    const double xi = w.u(i);
    for (int j = 0; j < w.nv; ++j) out(i, j) = half * (-w.v(j) * dx(i, j) + xi * ds(i, j));
  }
  return out;
}

double relative_residual(const ScaledField& hw, const ScaledField& w, cplx lambda,
                         const FieldFrame& frame, int guard) {
  ScaledField diff = w.like();
  for (std::size_t k = 0; k < w.values.size(); ++k) diff.values[k] = hw.values[k] - lambda * w.values[k];
  const double scale = std::max(std::abs(lambda), 0.5 * frame.omega_B);
  const double norm = oracle::interior_norm(w, guard);
  if (norm == 0.0) return oracle::interior_norm(diff, guard);
  return oracle::interior_norm(diff, guard) / (scale * norm);
}

cplx measured_eigenvalue(const ScaledField& hw, const ScaledField& w, int guard) {
  cplx num = 0.0;
  double den = 0.0;
  for (int i = guard; i < w.nu - guard; ++i) {
    for (int j = guard; j < w.nv - guard; ++j) {
      num += std::conj(w(i, j)) * hw(i, j);
      den += std::norm(w(i, j));
    }
  }
  return den > 0.0 ? num / den : cplx{0.0, 0.0};
}

double star_genvalue_energy(int n, const FieldFrame& frame) {
  if (n == 0) return 0.0;
  const double sign = n > 0 ? 1.0 : -1.0;
  return sign * frame.vf_eff * std::sqrt(frame.omega_B * std::abs(n));
}

StarGenvalueReport star_genvalue_report(int n, const FieldFrame& frame, double half_width,
                                        int grid_n) {
  if (n < 0) throw ConfigError("Landau level index must be non-negative");
  StarGenvalueReport r;
  r.state = "landau";
  r.n = n;
  r.grid_n = grid_n;
  r.half_width = half_width;
  r.spacing = 2.0 * half_width / (grid_n - 1);
  r.energy = star_genvalue_energy(n, frame);
  const double e2_ab = r.energy * r.energy / (frame.vf_eff * frame.vf_eff);
  r.expected_e1 = e2_ab - 0.5 * frame.omega_B;
  r.expected_e2 = e2_ab + 0.5 * frame.omega_B;

  const ScaledField lower = diagonal_solution(n, half_width, grid_n);
  const ScaledField h1_lower = apply_h1(lower, frame);
  const ScaledField h2_lower = apply_h2(lower, frame);
  r.measured_e2 = measured_eigenvalue(h1_lower, lower).real();
  r.residual_h1 = relative_residual(h1_lower, lower, r.expected_e2, frame);
  r.residual_h2 = relative_residual(h2_lower, lower, 0.0, frame);

  if (n >= 1) {
    const ScaledField upper = diagonal_solution(n - 1, half_width, grid_n);
    const ScaledField h1_upper = apply_h1(upper, frame);
    const ScaledField h2_upper = apply_h2(upper, frame);
    r.measured_e1 = measured_eigenvalue(h1_upper, upper).real();
    r.residual_h1 = std::max(r.residual_h1, relative_residual(h1_upper, upper, r.expected_e1, frame));
    r.residual_h2 = std::max(r.residual_h2, relative_residual(h2_upper, upper, 0.0, frame));
  }
  return r;
}

RealPartReport realpart_reconciliation(int n, const FieldFrame& frame, double half_width,
                                       int grid_n) {
  if (n < 1) throw ConfigError("real-part reconciliation needs n >= 1");
  RealPartReport r;
  r.n = n;
  r.grid_n = grid_n;
  r.spacing = 2.0 * half_width / (grid_n - 1);
  const ScaledField re = sample_scaled(half_width, grid_n, [&](double xi, double s) {
    return cplx{wigner_cross(n - 1, n, std::numbers::sqrt2 * cplx{xi, s}).real(), 0.0};
  });
  const ScaledField im = sample_scaled(half_width, grid_n, [&](double xi, double s) {
    return cplx{wigner_cross(n - 1, n, std::numbers::sqrt2 * cplx{xi, s}).imag(), 0.0};
  });
  const ScaledField h1 = apply_h1(re, frame);
  const ScaledField h2 = apply_h2(re, frame);
  r.residual_h1 = relative_residual(h1, re, n * frame.omega_B, frame);

  ScaledField target = im.like();
  for (std::size_t k = 0; k < im.values.size(); ++k)
    target.values[k] = -0.5 * frame.omega_B * im.values[k];
  ScaledField diff = im.like();
  for (std::size_t k = 0; k < im.values.size(); ++k) diff.values[k] = h2.values[k] - target.values[k];
  const double re_norm = oracle::interior_norm(re, kGuardCells);
  r.residual_h2 = oracle::interior_norm(diff, kGuardCells) / (0.5 * frame.omega_B * re_norm);
  r.h2_zero_claim = oracle::interior_norm(h2, kGuardCells) / (0.5 * frame.omega_B * re_norm);
  return r;
}

}  // namespace strainwig::verify
