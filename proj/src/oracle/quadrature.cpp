#include "strainwig/oracle/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <utility>

#include <Eigen/Dense>

#include "strainwig/errors.hpp"

namespace strainwig::oracle {

namespace {

// Orthonormal Hermite functions h_n(z) and h_{n-1}(z).
std::pair<double, double> hermite_pair(int n, double z) {
  double p1 = std::exp(-0.5 * z * z) / std::sqrt(std::sqrt(std::numbers::pi));
  double p2 = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
  }
  return {p1, p2};
}

}  // namespace

QuadratureRule gauss_hermite(int order) {
  if (order < 2 || order > 512) throw ConfigError("Gauss-Hermite order must be in [2, 512]");
  const int n = order;

  // Jacobi-matrix eigenvalues as starting points, then Newton on h_n.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int j = 1; j < n; ++j) sub(j - 1) = std::sqrt(0.5 * j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("Jacobi-matrix eigensolve failed");

  QuadratureRule r;
  r.order = n;
  r.nodes.resize(static_cast<std::size_t>(n));
  r.scaled_weights.resize(static_cast<std::size_t>(n));
  r.weights.resize(static_cast<std::size_t>(n));
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // positive half, largest root last
    double z = std::abs(es.eigenvalues()(n - 1 - i));
    if (n % 2 == 1 && i == m - 1) z = 0.0;
    for (int it = 0; it < 8 && z != 0.0; ++it) {
      const auto [h, hm1] = hermite_pair(n, z);
      const double step = h / (std::sqrt(2.0 * n) * hm1);
      z -= step;
      if (std::abs(step) <= 1e-16 * z) break;
    }
    const double hm1 = hermite_pair(n, z).second;
    const double w = 1.0 / (n * hm1 * hm1);
    r.nodes[n - 1 - i] = z;
    r.nodes[i] = -z;
    r.scaled_weights[n - 1 - i] = w;
    r.scaled_weights[i] = w;
  }
  for (int i = 0; i < n; ++i) r.weights[i] = r.scaled_weights[i] * std::exp(-r.nodes[i] * r.nodes[i]);
  return r;
}

const QuadratureRule& gauss_hermite_cached(int order) {
  static std::mutex mu;
  static std::array<std::unique_ptr<QuadratureRule>, 513> cache;
  if (order < 2 || order > 512) throw ConfigError("Gauss-Hermite order must be in [2, 512]");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[static_cast<std::size_t>(order)];
  if (!slot) slot = std::make_unique<QuadratureRule>(gauss_hermite(order));
  return *slot;
}

namespace {

cplx integrate(const WaveFunction& psi_a, const WaveFunction& psi_b, double x, double px,
               double c, const QuadratureRule& rule) {
  cplx sum{0.0, 0.0};
  for (int i = 0; i < rule.order; ++i) {
    const double z = rule.nodes[i] / c;
    const cplx g = std::polar(1.0, 2.0 * px * z) * psi_a(x - z) * std::conj(psi_b(x + z));
    sum += rule.scaled_weights[i] * g;
  }
  return sum / (std::numbers::pi * c);
}

}  // namespace

cplx wigner_integral(const WaveFunction& psi_a, const WaveFunction& psi_b, double x, double px,
                     const FieldFrame& frame, int order, bool check_convergence) {
  const double c = frame.xi_scale();
  const cplx w = integrate(psi_a, psi_b, x, px, c, gauss_hermite_cached(order));
  if (check_convergence) {
    const int doubled = std::min(2 * order, 512);
    const cplx w2 = integrate(psi_a, psi_b, x, px, c, gauss_hermite_cached(doubled));
    if (std::abs(w2 - w) > kOracleTolerance) {
      std::ostringstream os;
      os << "Wigner quadrature changed by " << std::abs(w2 - w) << " between orders " << order
         << " and " << doubled << " at (x, px) = (" << x << ", " << px << ")";
      throw ConvergenceError(os.str());
    }
    return w2;
  }
  return w;
}

Matrix2c spinor_wigner_integral(const WaveFunction& upper, const WaveFunction& lower, double x,
                                double px, const FieldFrame& frame, int order,
                                bool check_convergence) {
  Matrix2c m;
  m(0, 0) = wigner_integral(upper, upper, x, px, frame, order, check_convergence);
  m(0, 1) = wigner_integral(upper, lower, x, px, frame, order, check_convergence);
  m(1, 0) = wigner_integral(lower, upper, x, px, frame, order, check_convergence);
  m(1, 1) = wigner_integral(lower, lower, x, px, frame, order, check_convergence);
  return m;
}

}  // namespace strainwig::oracle
