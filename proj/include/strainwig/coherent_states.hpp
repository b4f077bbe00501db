#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "strainwig/landau_states.hpp"

namespace strainwig {

/// Coherent state of the generalised annihilation operator with eigenvalue alpha.
struct CoherentSpec {
  cplx alpha{0.0, 0.0};
  double delta_phase = 0.0;
  int lambda = 1;
  int N = 0;  // truncation order; 0 selects it from the tail bound

  cplx alpha_tilde() const;
  /// N if set, else truncation_order(|alpha_tilde|).
  int order() const;
};

/// Relative tail bound |at|^{2N}/N! < kTailTolerance e^{|at|^2} used for the
/// adaptive order.
inline constexpr double kTailTolerance = 1e-30;
inline constexpr int kMaxOrder = 10000;

/// Smallest N meeting the tail bound (at least 8). Throws TruncationError
/// beyond kMaxOrder.
int truncation_order(double abs_alpha_tilde, double tolerance = kTailTolerance);

/// Landau-basis coefficients c_0..c_N.
struct CoefficientSet {
  std::vector<cplx> c;
  int size() const { return static_cast<int>(c.size()); }
};

/// 1 / sqrt(2 e^{|at|^2} - 1).
double coherent_c0(cplx alpha_tilde);

CoefficientSet coefficients(const CoherentSpec& spec);

/// Theta^- applied to a coefficient set via its action on the basis,
/// Theta^- Psi_n = e^{i delta} sqrt(n) / sqrt(2^{delta_1n}) Psi_{n-1}.
CoefficientSet annihilator_action(const CoefficientSet& coeffs, const CoherentSpec& spec);

/// Truncated matrix of Theta^- in the Landau basis, (N+1) x (N+1).
Eigen::MatrixXcd annihilator_matrix(int N, double delta_phase);

/// Un-normalised amplitudes at^n / sqrt(n!) for n = 0..N.
std::vector<cplx> unnormalized_amplitudes(cplx alpha_tilde, int N);

struct CoherentComponents {
  cplx psi_prime;  // sum_m a_{m+1} psi_m, truncated series
  cplx psi;        // sum_n a_n psi_n, Gaussian closed form
};

CoherentComponents coherent_components(const CoherentSpec& spec, double x,
                                       const FieldFrame& frame);

/// Normalised spinor c0 [psi', i lambda psi].
std::array<cplx, 2> coherent_spinor(const CoherentSpec& spec, double x, const FieldFrame& frame);

}  // namespace strainwig
