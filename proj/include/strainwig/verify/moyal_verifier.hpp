#pragma once

#include <string>

#include "strainwig/landau_states.hpp"
#include "strainwig/oracle/finite_difference.hpp"

namespace strainwig::verify {

using ScaledField = oracle::GridFunction<cplx>;

/// Largest grid spacing in xi or s accepted by the Bopp-shift operators.
inline constexpr double kMaxSpacing = 0.1;
/// Edge cells excluded from residual norms.
inline constexpr int kGuardCells = 4;

/// W sampled on a (xi, s) grid of n x n nodes over [-half_width, half_width]^2.
template <class F>
ScaledField sample_scaled(double half_width, int n, F&& f) {
  return ScaledField::sample(n, -half_width, half_width, n, -half_width, half_width,
                             std::forward<F>(f));
}

/// (omega_B/2) [s^2 + xi^2 - (1/4) d_xi^2 - (1/4) d_s^2] on the p_y = k slice.
ScaledField apply_h1(const ScaledField& w, const FieldFrame& frame);
/// (omega_B/2) [-s d_xi + xi d_s] on the p_y = k slice.
ScaledField apply_h2(const ScaledField& w, const FieldFrame& frame);

/// ||H W - lambda W|| / (max(|lambda|, omega_B/2) ||W||) over the interior.
double relative_residual(const ScaledField& hw, const ScaledField& w, cplx lambda,
                         const FieldFrame& frame, int guard = kGuardCells);

/// Rayleigh quotient <W, H W> / <W, W> over the interior.
cplx measured_eigenvalue(const ScaledField& hw, const ScaledField& w, int guard = kGuardCells);

struct StarGenvalueReport {
  std::string state;
  int n = 0;
  double energy = 0.0;      // sgn(n) vf_eff sqrt(omega_B n)
  double expected_e1 = 0.0;  // E^2/(ab) - omega_B/2, upper component
  double expected_e2 = 0.0;  // E^2/(ab) + omega_B/2, lower component
  double measured_e1 = 0.0;
  double measured_e2 = 0.0;
  double residual_h1 = 0.0;  // max over the components present
  double residual_h2 = 0.0;
  double spacing = 0.0;
  int grid_n = 0;
  double half_width = 0.0;
};

inline constexpr double kDefaultHalfWidth = 6.0;
inline constexpr int kDefaultVerifierGrid = 401;

/// sgn(n) vf_eff sqrt(omega_B |n|).
double star_genvalue_energy(int n, const FieldFrame& frame);

StarGenvalueReport star_genvalue_report(int n, const FieldFrame& frame,
                                        double half_width = kDefaultHalfWidth,
                                        int grid_n = kDefaultVerifierGrid);

struct RealPartReport {
  int n = 0;
  double residual_h1 = 0.0;         // H1 Re W vs n omega_B Re W
  double residual_h2 = 0.0;         // H2 Re W vs -(omega_B/2) Im W
  double h2_zero_claim = 0.0;       // ||H2 Re W|| / ((omega_B/2) ||Re W||)
  double spacing = 0.0;
  int grid_n = 0;
};

/// Off-diagonal W_{n-1,n}: real part under H1 and H2. Requires n >= 1.
RealPartReport realpart_reconciliation(int n, const FieldFrame& frame,
                                       double half_width = kDefaultHalfWidth,
                                       int grid_n = kDefaultVerifierGrid);

}  // namespace strainwig::verify
