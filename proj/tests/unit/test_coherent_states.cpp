#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "strainwig/coherent_states.hpp"
#include "strainwig/errors.hpp"
#include "strainwig/special_functions.hpp"

using namespace strainwig;

namespace {

CoherentSpec spec(double mod, double arg, double delta = 0.0, int N = 0) {
  CoherentSpec s;
  s.alpha = std::polar(mod, arg);
  s.delta_phase = delta;
  s.N = N;
  return s;
}

FieldFrame frame() { return FieldFrame::make(1.0, 0.3, 0.6, 0.8); }

}  // namespace

TEST_CASE("adaptive order meets the tail bound") {
  for (double r : {0.0, 0.5, 1.0, 3.0, 6.0, 20.0}) {
    const int N = truncation_order(r);
    CHECK(N >= 8);
    CHECK(N > r * r);
    const double log_tail = 2 * N * std::log(std::max(r, 1e-300)) - std::lgamma(N + 1.0);
    if (r > 0) CHECK(log_tail < std::log(kTailTolerance) + r * r);
  }
  CHECK(truncation_order(3.0) < 70);
}

TEST_CASE("truncation beyond the cap suggests an order") {
  try {
    truncation_order(150.0);
    FAIL("expected TruncationError");
  } catch (const TruncationError& e) {
    CHECK(e.suggested_order() > kMaxOrder);
  }
  CHECK_THROWS_AS(spec(1.0, 0.0, 0.0, -1).order(), ConfigError);
}

TEST_CASE("coefficients are normalised") {
  for (double r : {0.0, 0.3, 1.0, 3.0, 5.0}) {
    const auto c = coefficients(spec(r, 0.7));
    double s = 0.0;
    for (const auto& v : c.c) s += std::norm(v);
    CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.c[0].real() == doctest::Approx(1.0 / std::sqrt(2.0 * std::exp(r * r) - 1.0)));
  }
}

TEST_CASE("alpha = 0 is the ground state") {
  const auto c = coefficients(spec(0.0, 0.0));
  CHECK(c.c[0] == cplx{1.0, 0.0});
  for (int n = 1; n < c.size(); ++n) CHECK(std::abs(c.c[n]) == 0.0);
  const auto psi = coherent_spinor(spec(0.0, 0.0), 0.4, frame());
  CHECK(std::abs(psi[0]) == 0.0);
}

TEST_CASE("annihilator eigenproperty over the alpha and delta grid") {
  for (double mod : {0.5, 1.0, 2.0, 3.0}) {
    for (double arg : {0.0, std::numbers::pi / 4, -std::numbers::pi / 2, 2.5}) {
      for (double delta : {0.0, 0.4, -1.1}) {
        const auto s = spec(mod, arg, delta);
        const auto c = coefficients(s);
        const auto ac = annihilator_action(c, s);
        const Eigen::MatrixXcd m = annihilator_matrix(c.size() - 1, delta);
        Eigen::VectorXcd v(c.size());
        for (int n = 0; n < c.size(); ++n) v[n] = c.c[n];
        const Eigen::VectorXcd mv = m * v;
        for (int n = 0; n + 1 < c.size(); ++n) {
          CHECK(std::abs(ac.c[n] - s.alpha * c.c[n]) < 1e-12);
          CHECK(std::abs(mv[n] - ac.c[n]) < 1e-15);
        }
      }
    }
  }
}

TEST_CASE("closed-form lower component equals its basis expansion") {
  const FieldFrame f = frame();
  for (double arg : {0.3, -1.5}) {
    const auto s = spec(2.0, arg, 0.2);
    const cplx at = s.alpha_tilde();
    const auto amps = unnormalized_amplitudes(at, s.order());
    for (double x : {-2.0, -0.5, 0.0, 1.0, 2.5}) {
      const auto comp = coherent_components(s, x, f);
      cplx lower{0.0, 0.0};
      cplx upper{0.0, 0.0};
      const double xi = f.xi_of_x(x);
      const double scale = std::sqrt(f.xi_scale());
      for (int n = 0; n <= s.order(); ++n) lower += amps[n] * scale * hermite_function(n, xi);
      for (int m = 0; m < s.order(); ++m) upper += amps[m + 1] * scale * hermite_function(m, xi);
      CHECK(std::abs(comp.psi - lower) < 1e-12 * std::max(1.0, std::abs(lower)));
      CHECK(std::abs(comp.psi_prime - upper) < 1e-13 * std::max(1.0, std::abs(upper)));
    }
  }
}

TEST_CASE("coherent spinor is normalised") {
  const FieldFrame f = frame();
  const auto s = spec(3.0, std::numbers::pi / 4);
  const double lo = f.x_of_xi(-12.0), hi = f.x_of_xi(12.0);
  const int n = 24001;
  const double h = (hi - lo) / (n - 1);
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto v = coherent_spinor(s, lo + i * h, f);
    norm += std::norm(v[0]) + std::norm(v[1]);
  }
  CHECK(norm * h == doctest::Approx(1.0).epsilon(1e-10));
}
