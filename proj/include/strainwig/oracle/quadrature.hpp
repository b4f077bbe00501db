#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "strainwig/landau_states.hpp"
#include "strainwig/phase_space.hpp"

namespace strainwig::oracle {

/// Gauss-Hermite rule for int e^{-u^2} f(u) du. scaled_weights[i] =
/// weights[i] * exp(nodes[i]^2) stays finite at every order.
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scaled_weights;
};

/// Newton iteration on the orthonormal Hermite-function recurrence, 2 <= order <= 512.
QuadratureRule gauss_hermite(int order);

/// Same rule cached per order (thread safe).
const QuadratureRule& gauss_hermite_cached(int order);

using WaveFunction = std::function<cplx(double)>;

inline constexpr int kDefaultOracleOrder = 120;
inline constexpr double kOracleTolerance = 1e-9;

/// (1/pi) int e^{2 i px z} psi_a(x - z) conj(psi_b(x + z)) dz, by Gauss-Hermite in
/// the scaled variable u = sqrt(omega_zeta/2) z. With check_convergence the
/// integral is repeated at twice the order and ConvergenceError thrown when
/// the two differ by more than kOracleTolerance.
cplx wigner_integral(const WaveFunction& psi_a, const WaveFunction& psi_b, double x, double px,
                     const FieldFrame& frame, int order = kDefaultOracleOrder,
                     bool check_convergence = true);

/// 2x2 Wigner matrix of a spinor [upper, lower] by direct quadrature.
Matrix2c spinor_wigner_integral(const WaveFunction& upper, const WaveFunction& lower, double x,
                                double px, const FieldFrame& frame,
                                int order = kDefaultOracleOrder, bool check_convergence = true);

}  // namespace strainwig::oracle
