#include "strainwig/landau_states.hpp"

#include <cmath>

#include "strainwig/errors.hpp"
#include "strainwig/fault_injection.hpp"
#include "strainwig/special_functions.hpp"

namespace strainwig {

FieldFrame FieldFrame::make(double B, double k, double zeta, double vf_eff) {
  if (!(B > 0.0) || !std::isfinite(B)) throw ConfigError("magnetic field B must be positive");
  if (!std::isfinite(k)) throw ConfigError("wavenumber k must be finite");
  if (!(zeta > 0.0) || !(vf_eff > 0.0)) throw ConfigError("cone parameters must be positive");
  FieldFrame f;
  f.B = B;
  f.k = k;
  f.zeta = zeta;
  f.vf_eff = vf_eff;
  f.omega_zeta = 2.0 * B / zeta * fault_factor(Fault::OmegaZeta);
  f.omega_B = zeta * f.omega_zeta;
  f.tau = std::log(std::sqrt(2.0 / f.omega_zeta));
  return f;
}

FieldFrame FieldFrame::make(double B, double k, const ConeParameters& cone) {
  return make(B, k, cone.zeta, cone.vf_eff);
}

double FieldFrame::xi_scale() const { return std::sqrt(0.5 * omega_zeta); }
double FieldFrame::xi_of_x(double x) const { return xi_scale() * (x + x_shift()); }
double FieldFrame::sp_of_px(double px) const { return px / xi_scale(); }
double FieldFrame::x_of_xi(double xi) const { return xi / xi_scale() - x_shift(); }
double FieldFrame::px_of_sp(double sp) const { return sp * xi_scale(); }

double landau_energy(int n, int s, const FieldFrame& frame) {
  if (n <= 0) return 0.0;
  return (s >= 0 ? 1.0 : -1.0) * frame.vf_eff * std::sqrt(2.0 * n * frame.B);
}

LandauState landau_state(int n, int s, int lambda, const FieldFrame& frame) {
  if (n < 0) throw ConfigError("Landau level index must be non-negative");
  return LandauState{n, s >= 0 ? 1 : -1, lambda >= 0 ? 1 : -1, landau_energy(n, s, frame)};
}

double oscillator_psi(int n, double x, const FieldFrame& frame) {
  return std::sqrt(frame.xi_scale()) * hermite_function(n, frame.xi_of_x(x));
}

std::vector<double> oscillator_psi_all(int nmax, double x, const FieldFrame& frame) {
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1);
  hermite_functions(nmax, frame.xi_of_x(x), out.data());
  const double norm = std::sqrt(frame.xi_scale());
  for (double& v : out) v *= norm;
  return out;
}

double oscillator_phi(int n, double px, const FieldFrame& frame) {
  return hermite_function(n, frame.sp_of_px(px)) / std::sqrt(frame.xi_scale());
}

std::array<cplx, 2> landau_spinor(int n, double x, const FieldFrame& frame, int lambda, int s) {
  const double sign = (lambda >= 0 ? 1.0 : -1.0) * (s >= 0 ? 1.0 : -1.0);
  if (n == 0) return {cplx{0.0, 0.0}, cplx{0.0, sign * oscillator_psi(0, x, frame)}};
  const auto psi = oscillator_psi_all(n, x, frame);
  const double norm = std::sqrt(0.5);
  return {cplx{norm * psi[n - 1], 0.0}, cplx{0.0, sign * norm * psi[n]}};
}

}  // namespace strainwig
