#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "strainwig/errors.hpp"
#include "strainwig/oracle/finite_difference.hpp"
#include "strainwig/oracle/quadrature.hpp"
#include "strainwig/wigner_core.hpp"

using namespace strainwig;
using namespace strainwig::oracle;

TEST_CASE("Gauss-Hermite weights sum to sqrt(pi) at every order") {
  for (int n : {2, 3, 5, 10, 64, 120, 200, 240, 320, 512}) {
    const QuadratureRule r = gauss_hermite(n);
    double s = 0.0;
    for (double w : r.weights) s += w;
    CHECK(s == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    for (int i = 0; i < n; ++i) {
      CHECK(r.nodes[i] == doctest::Approx(-r.nodes[n - 1 - i]).scale(1.0).epsilon(1e-13));
      CHECK(r.scaled_weights[i] > 0.0);
      if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
    }
  }
}

TEST_CASE("five-point rule matches tabulated nodes") {
  const QuadratureRule r = gauss_hermite(5);
  CHECK(r.nodes[4] == doctest::Approx(2.0201828704560856));
  CHECK(r.nodes[3] == doctest::Approx(0.9585724646138185));
  CHECK(std::abs(r.nodes[2]) < 1e-15);
  CHECK(r.weights[4] == doctest::Approx(0.019953242059045913));
  CHECK(r.weights[2] == doctest::Approx(0.9453087204829419));
}

TEST_CASE("Gauss-Hermite integrates even moments exactly") {
  const QuadratureRule r = gauss_hermite(40);
  for (int k = 0; k <= 30; ++k) {
    double s = 0.0;
    for (int i = 0; i < r.order; ++i) s += r.weights[i] * std::pow(r.nodes[i], 2 * k);
    CHECK(s == doctest::Approx(std::tgamma(k + 0.5)).epsilon(1e-12));
  }
}

TEST_CASE("Gauss-Hermite cosine integral") {
  const QuadratureRule& r = gauss_hermite_cached(80);
  for (double w : {0.5, 2.0, 5.0}) {
    double s = 0.0;
    for (int i = 0; i < r.order; ++i) s += r.weights[i] * std::cos(w * r.nodes[i]);
    CHECK(s == doctest::Approx(std::sqrt(std::numbers::pi) * std::exp(-w * w / 4)).epsilon(1e-13));
  }
  CHECK(&gauss_hermite_cached(80) == &r);
  CHECK_THROWS_AS(gauss_hermite(1), ConfigError);
  CHECK_THROWS_AS(gauss_hermite(513), ConfigError);
}

TEST_CASE("quadrature oracle reproduces the cross-Wigner closed form") {
  StrainConfig c;
  c.epsilon = 0.1;
  c.direction = StrainDirection::Armchair;
  const FieldFrame f = FieldFrame::make(1.2, 0.3, cone_parameters(c));
  for (int a = 0; a <= 8; a += 2)
    for (int b = 0; b <= 8; b += 3) {
      auto pa = [&](double x) { return cplx{oscillator_psi(a, x, f), 0.0}; };
      auto pb = [&](double x) { return cplx{oscillator_psi(b, x, f), 0.0}; };
      for (auto [x, px] : {std::pair{0.1, 0.2}, {-1.0, 1.3}, {0.8, -2.0}}) {
        const cplx q = wigner_integral(pa, pb, x, px, f);
        const cplx w = wigner_cross(a, b, PhaseSpacePoint::physical(x, px, f).chi);
        CHECK(std::abs(q - w) < 1e-12);
      }
    }
}

TEST_CASE("quadrature oracle flags unresolved integrands") {
  const FieldFrame f = FieldFrame::make(1.0, 0.0, 1.0, 1.0);
  auto spike = [](double x) { return std::polar(std::exp(-0.5 * x * x), 30.0 * x); };
  CHECK_THROWS_AS(wigner_integral(spike, spike, 0.0, 0.0, f, 20), ConvergenceError);
  CHECK_NOTHROW(wigner_integral(spike, spike, 0.0, 0.0, f, 20, false));
}

TEST_CASE("finite differences are exact on quartics") {
  auto f = GridFunction<double>::sample(11, -1.0, 1.5, 9, -0.5, 2.0, [](double u, double v) {
    return u * u * u * u - 2 * u * u * u + v * v * v * v + u * v;
  });
  const auto du = fd_apply(Derivative::First, f, Axis::U);
  const auto duu = fd_apply(Derivative::Second, f, Axis::U);
  const auto dv = fd_apply(Derivative::First, f, Axis::V);
  const auto dvv = fd_apply(Derivative::Second, f, Axis::V);
  for (int i = 0; i < f.nu; ++i)
    for (int j = 0; j < f.nv; ++j) {
      const double u = f.u(i), v = f.v(j);
      CHECK(du(i, j) == doctest::Approx(4 * u * u * u - 6 * u * u + v).scale(1.0).epsilon(1e-11));
      CHECK(duu(i, j) == doctest::Approx(12 * u * u - 12 * u).scale(1.0).epsilon(1e-10));
      CHECK(dv(i, j) == doctest::Approx(4 * v * v * v + u).scale(1.0).epsilon(1e-11));
      CHECK(dvv(i, j) == doctest::Approx(12 * v * v).scale(1.0).epsilon(1e-10));
    }
}

TEST_CASE("finite differences converge at fourth order") {
  auto err = [](int n) {
    auto f = GridFunction<double>::sample(n, 0.0, 3.0, 5, 0.0, 1.0,
                                          [](double u, double) { return std::sin(2 * u); });
    const auto d = fd_apply(Derivative::Second, f, Axis::U);
    double e = 0.0;
    for (int i = 2; i < n - 2; ++i) e = std::max(e, std::abs(d(i, 0) + 4 * std::sin(2 * f.u(i))));
    return e;
  };
  const double ratio = err(61) / err(121);
  CHECK(ratio > 14.0);
  CHECK(ratio < 18.0);
}

TEST_CASE("finite differences need five samples") {
  auto f = GridFunction<double>::sample(4, 0.0, 1.0, 8, 0.0, 1.0, [](double u, double) { return u; });
  CHECK_THROWS_AS(fd_apply(Derivative::First, f, Axis::U), GridTooCoarse);
  CHECK_NOTHROW(fd_apply(Derivative::First, f, Axis::V));
}
