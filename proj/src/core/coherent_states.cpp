#include "strainwig/coherent_states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "strainwig/errors.hpp"
#include "strainwig/special_functions.hpp"

namespace strainwig {

namespace {

double log_c0(double r2) { return -0.5 * (r2 + std::log(2.0 - std::exp(-r2))); }

}  // namespace

cplx CoherentSpec::alpha_tilde() const { return alpha * std::polar(1.0, -delta_phase); }

int CoherentSpec::order() const {
  if (N < 0) throw ConfigError("truncation order must be non-negative");
  return N > 0 ? N : truncation_order(std::abs(alpha_tilde()));
}

int truncation_order(double r, double tolerance) {
  if (!std::isfinite(r) || r < 0.0) throw ConfigError("|alpha| must be finite");
  const double r2 = r * r;
  const double log_bound = std::log(tolerance) + r2;
  const double log_r = r > 0.0 ? std::log(r) : -INFINITY;
  // log of |at|^{2n}/n!, accumulated term by term
  double log_term = 0.0;
  for (int n = 1; n <= kMaxOrder; ++n) {
    log_term += 2.0 * log_r - std::log(static_cast<double>(n));
    if (n >= 8 && static_cast<double>(n) > r2 && log_term < log_bound) return n;
  }
  const int suggested = static_cast<int>(std::ceil(r2 + 12.0 * r + 40.0));
  std::ostringstream os;
  os << "coherent-state tail bound not reachable with N <= " << kMaxOrder << " for |alpha| = "
     << r << "; would need N ~ " << suggested;
  throw TruncationError(os.str(), suggested);
}

double coherent_c0(cplx alpha_tilde) { return std::exp(log_c0(std::norm(alpha_tilde))); }

CoefficientSet coefficients(const CoherentSpec& spec) {
  const int N = spec.order();
  if (N < 1) throw ConfigError("truncation order must be at least 1");
  const cplx at = spec.alpha_tilde();
  const double r = std::abs(at);
  const double theta = std::arg(at);
  CoefficientSet out;
  out.c.assign(static_cast<std::size_t>(N) + 1, cplx{0.0, 0.0});
  double log_mag = log_c0(r * r);
  out.c[0] = std::exp(log_mag);
  if (r == 0.0) return out;
  log_mag += 0.5 * std::log(2.0);
  const double log_r = std::log(r);
  for (int n = 1; n <= N; ++n) {
    log_mag += log_r - 0.5 * std::log(static_cast<double>(n));
    out.c[n] = std::polar(std::exp(log_mag), n * theta);
  }
  return out;
}

CoefficientSet annihilator_action(const CoefficientSet& coeffs, const CoherentSpec& spec) {
  const cplx phase = std::polar(1.0, spec.delta_phase);
  CoefficientSet out;
  out.c.assign(coeffs.c.size(), cplx{0.0, 0.0});
  for (int n = 1; n < coeffs.size(); ++n) {
    const double factor = n == 1 ? std::sqrt(0.5) : std::sqrt(static_cast<double>(n));
    out.c[n - 1] = phase * factor * coeffs.c[n];
  }
  return out;
}

Eigen::MatrixXcd annihilator_matrix(int N, double delta_phase) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N + 1, N + 1);
  const cplx phase = std::polar(1.0, delta_phase);
  for (int n = 1; n <= N; ++n)
    m(n - 1, n) = phase * (n == 1 ? std::sqrt(0.5) : std::sqrt(static_cast<double>(n)));
  return m;
}

std::vector<cplx> unnormalized_amplitudes(cplx alpha_tilde, int N) {
  std::vector<cplx> a(static_cast<std::size_t>(N) + 1);
  a[0] = 1.0;
  for (int n = 1; n <= N; ++n) a[n] = a[n - 1] * alpha_tilde / std::sqrt(static_cast<double>(n));
  return a;
}

CoherentComponents coherent_components(const CoherentSpec& spec, double x,
                                       const FieldFrame& frame) {
  const cplx at = spec.alpha_tilde();
  const double xi = frame.xi_of_x(x);
  const double scale = std::sqrt(frame.xi_scale());
  const double h0norm = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));

  CoherentComponents out;
  out.psi = scale * h0norm *
            std::exp(-0.5 * xi * xi + std::numbers::sqrt2 * at * xi - 0.5 * at * at);
  out.psi_prime = 0.0;
  if (at == cplx{0.0, 0.0}) return out;

  const int N = spec.order();
  std::vector<double> h(static_cast<std::size_t>(N));
  hermite_functions(N - 1, xi, h.data());
  cplx a = at;  // a_{m+1}
  cplx sum{0.0, 0.0};
  for (int m = 0; m < N; ++m) {
    sum += a * h[m];
    a *= at / std::sqrt(m + 2.0);
  }
  out.psi_prime = scale * sum;
  return out;
}

std::array<cplx, 2> coherent_spinor(const CoherentSpec& spec, double x, const FieldFrame& frame) {
  const auto comp = coherent_components(spec, x, frame);
  const double c0 = coherent_c0(spec.alpha_tilde());
  const double sign = spec.lambda >= 0 ? 1.0 : -1.0;
  return {c0 * comp.psi_prime, cplx{0.0, sign} * c0 * comp.psi};
}

}  // namespace strainwig
