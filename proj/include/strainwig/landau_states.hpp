#pragma once

#include <array>
#include <complex>
#include <vector>

#include "strainwig/strain_geometry.hpp"

namespace strainwig {

using cplx = std::complex<double>;

/// Magnetic-field frame in the Landau gauge (hbar = e = vF = 1).
struct FieldFrame {
  double B = 1.0;
  double k = 0.0;
  double zeta = 1.0;
  double vf_eff = 1.0;
  double omega_zeta = 2.0;  // 2B / zeta
  double omega_B = 2.0;     // zeta * omega_zeta
  double tau = 0.0;         // ln sqrt(2 / omega_zeta)

  /// Throws ConfigError unless B > 0 and the cone parameters are positive.
  static FieldFrame make(double B, double k, const ConeParameters& cone);
  static FieldFrame make(double B, double k, double zeta, double vf_eff);

  /// Guiding-centre shift 2k / (zeta omega_zeta).
  double x_shift() const { return 2.0 * k / (zeta * omega_zeta); }
  double xi_of_x(double x) const;
  double sp_of_px(double px) const;
  double x_of_xi(double xi) const;
  double px_of_sp(double sp) const;
  /// x-scale sqrt(omega_zeta / 2); dx dpx = dxi dsp.
  double xi_scale() const;
};

struct LandauState {
  int n = 0;
  int s = 1;
  int lambda = 1;
  double energy = 0.0;
};

/// s sqrt(ab) sqrt(2 n B).
double landau_energy(int n, int s, const FieldFrame& frame);
LandauState landau_state(int n, int s, int lambda, const FieldFrame& frame);

/// Normalised oscillator function (omega_zeta/2)^{1/4} h_n(xi(x)).
double oscillator_psi(int n, double x, const FieldFrame& frame);
/// psi_0..psi_nmax at x.
std::vector<double> oscillator_psi_all(int nmax, double x, const FieldFrame& frame);
/// Same functions in momentum, (2/omega_zeta)^{1/4} h_n(sp(px)) (modulus).
double oscillator_phi(int n, double px, const FieldFrame& frame);

/// Pseudo-spinor at K_D without the e^{iky} factor:
/// [(1 - d0n) psi_{n-1}, i lambda s psi_n] / sqrt(2^{1 - d0n}).
std::array<cplx, 2> landau_spinor(int n, double x, const FieldFrame& frame, int lambda = 1,
                                  int s = 1);

}  // namespace strainwig
