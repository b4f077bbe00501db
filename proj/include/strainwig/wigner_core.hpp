#pragma once

#include <vector>

#include "strainwig/coherent_states.hpp"
#include "strainwig/phase_space.hpp"

namespace strainwig {

/// Cross-Wigner function W_{a,b} of oscillator levels a and b at chi,
/// (1/pi) int e^{2 i s y} h_a(xi - y) h_b(xi + y) dy.
cplx wigner_cross(int a, int b, cplx chi);

/// W[sum_j u_j psi_j, sum_k v_k psi_k] = sum_{j,k} u_j conj(v_k) W_{j,k}(chi).
/// With include_diagonal = false the j == k terms are skipped.
cplx wigner_cross_sum(const std::vector<cplx>& u, const std::vector<cplx>& v, cplx chi,
                      bool include_diagonal = true);

/// 2x2 Wigner matrix of the Landau state n at K_D (lambda, s = +-1).
Matrix2c wigner_landau(int n, const PhaseSpacePoint& p, int lambda = 1, int s = 1);

/// e^{2 tau} px^2 + e^{-2 tau} (x + 2k/(zeta omega_zeta))^2.
double classical_energy(const PhaseSpacePoint& p, const FieldFrame& frame);

/// Physical time for the dimensionless t' = t / (vf_eff sqrt(2B)).
double physical_time(double t_prime, const FieldFrame& frame);

/// Precomputed coefficient data for one coherent state in one frame.
class CoherentWigner {
public:
  /// Static matrix (closed forms for W12 and W22).
  CoherentWigner(const CoherentSpec& spec, const FieldFrame& frame);
  /// Time-evolved matrix at dimensionless time t'.
  CoherentWigner(const CoherentSpec& spec, const FieldFrame& frame, double t_prime);

  Matrix2c operator()(const PhaseSpacePoint& p) const;

  int order() const { return order_; }
  double c0() const { return c0_; }
  cplx alpha_tilde() const { return at_; }
  /// Landau-basis amplitudes of the upper and lower spinor components.
  const std::vector<cplx>& upper() const { return upper_; }
  const std::vector<cplx>& lower() const { return lower_; }

private:
  Matrix2c static_matrix(const PhaseSpacePoint& p) const;
  Matrix2c evolved_matrix(const PhaseSpacePoint& p) const;

  cplx at_;
  int lambda_;
  int order_;
  double c0_;
  bool evolved_;
  std::vector<cplx> upper_;
  std::vector<cplx> lower_;
};

Matrix2c wigner_coherent(const CoherentSpec& spec, const PhaseSpacePoint& p,
                         const FieldFrame& frame);
Matrix2c wigner_coherent_evolved(const CoherentSpec& spec, const PhaseSpacePoint& p,
                                 const FieldFrame& frame, double t_prime);

/// xi, s in [-6, 6].
GridSpec default_landau_grid(const FieldFrame& frame, int n = kDefaultGridN);
/// Half-width 5 around the maximum of W22, (xi, s) = sqrt(2) at.
GridSpec default_coherent_grid(const CoherentSpec& spec, const FieldFrame& frame,
                               int n = kDefaultGridN);
/// Centred at the origin with half-width |centroid| + 5, so the rotating
/// state stays inside the window at every t'.
GridSpec default_evolve_grid(const CoherentSpec& spec, const FieldFrame& frame,
                             int n = kDefaultGridN);

WignerField landau_field(int n, const FieldFrame& frame, const GridSpec& grid, int lambda = 1,
                         int s = 1);
WignerField coherent_field(const CoherentSpec& spec, const FieldFrame& frame,
                           const GridSpec& grid);
WignerField evolved_field(const CoherentSpec& spec, const FieldFrame& frame, const GridSpec& grid,
                          double t_prime);

}  // namespace strainwig
