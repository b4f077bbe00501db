#include "strainwig/verify/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "strainwig/coherent_states.hpp"
#include "strainwig/errors.hpp"
#include "strainwig/grid_kernels.hpp"
#include "strainwig/oracle/quadrature.hpp"
#include "strainwig/special_functions.hpp"
#include "strainwig/strain_geometry.hpp"
#include "strainwig/wigner_core.hpp"

namespace strainwig::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

class Runner {
public:
  explicit Runner(VerifyReport& r) : report_(r) {}

  // check(name, tolerance, fn) where fn returns the measured value and the
  // check passes when measured <= tolerance.
  void below(const std::string& name, double tolerance, const std::function<double()>& fn,
             const std::string& detail = {}) {
    run(name, tolerance, detail, [&](CheckResult& c) {
      c.measured = fn();
      c.passed = c.measured <= tolerance;
    });
  }

  void above(const std::string& name, double threshold, const std::function<double()>& fn,
             const std::string& detail = {}) {
    run(name, threshold, detail, [&](CheckResult& c) {
      c.measured = fn();
      c.passed = c.measured >= threshold;
    });
  }

  void info(const std::string& name, const std::function<double()>& fn, const std::string& detail) {
    run(name, 0.0, detail, [&](CheckResult& c) {
      c.measured = fn();
      c.passed = true;
      c.informational = true;
    });
  }

private:
  void run(const std::string& name, double tolerance, const std::string& detail,
           const std::function<void(CheckResult&)>& body) {
    CheckResult c;
    c.name = name;
    c.tolerance = tolerance;
    c.detail = detail;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.passed = false;
      c.errored = true;
      c.detail = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  VerifyReport& report_;
};

FieldFrame strained_frame(StrainDirection dir, double eps) {
  StrainConfig cfg;
  cfg.direction = dir;
  cfg.epsilon = eps;
  return FieldFrame::make(1.0, 0.0, cone_parameters(cfg));
}

double oracle_equivalence(int max_level, int grid_n, const FieldFrame& frame) {
  double worst = 0.0;
  const double lo = -4.0;
  const double h = 8.0 / (grid_n - 1);
  for (int a = 0; a <= max_level; ++a) {
    for (int b = 0; b <= max_level; ++b) {
      const oracle::WaveFunction fa = [&frame, a](double x) { return cplx{oscillator_psi(a, x, frame), 0.0}; };
      const oracle::WaveFunction fb = [&frame, b](double x) { return cplx{oscillator_psi(b, x, frame), 0.0}; };
      for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
          const auto p = PhaseSpacePoint::scaled(lo + i * h, lo + j * h, frame);
          const cplx closed = wigner_cross(a, b, p.chi);
          const cplx quad = oracle::wigner_integral(fa, fb, p.x, p.px, frame);
          worst = std::max(worst, std::abs(closed - quad));
        }
      }
    }
  }
  return worst;
}

double spectrum_consistency(int nmax, const FieldFrame& frame) {
  double worst = 0.0;
  for (int n = 1; n <= nmax; ++n) {
    const double a = star_genvalue_energy(n, frame);
    const double b = landau_energy(n, 1, frame);
    worst = std::max(worst, std::abs(a - b) / std::abs(b));
  }
  return worst;
}

double landau_normalization(int nmax, const FieldFrame& frame) {
  double worst = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    const WignerField f = landau_field(n, frame, default_landau_grid(frame));
    worst = std::max(worst, std::abs(field_stats(f).trace_integral - 1.0));
  }
  return worst;
}

double landau_marginals(int nmax, const FieldFrame& frame) {
  const GridSpec g = default_landau_grid(frame);
  double worst = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    std::vector<double> w(g.size());
    for (int i = 0; i < g.nx; ++i)
      for (int j = 0; j < g.npx; ++j)
        w[static_cast<std::size_t>(i) * g.npx + j] =
            wigner_cross(n, n, PhaseSpacePoint::physical(g.x(i), g.px(j), frame).chi).real();
    for (int i = 0; i < g.nx; ++i) {
      double sum = 0.0;
      for (int j = 0; j < g.npx; ++j) sum += w[static_cast<std::size_t>(i) * g.npx + j];
      const double psi = oscillator_psi(n, g.x(i), frame);
      worst = std::max(worst, std::abs(sum * g.dpx - psi * psi));
    }
    for (int j = 0; j < g.npx; ++j) {
      double sum = 0.0;
      for (int i = 0; i < g.nx; ++i) sum += w[static_cast<std::size_t>(i) * g.npx + j];
      const double phi = oscillator_phi(n, g.px(j), frame);
      worst = std::max(worst, std::abs(sum * g.dx - phi * phi));
    }
  }
  return worst;
}

double coherent_normalization(const CoherentSpec& spec, const FieldFrame& frame) {
  const WignerField f = coherent_field(spec, frame, default_coherent_grid(spec, frame));
  return std::abs(field_stats(f).trace_integral - 1.0);
}

double eigenproperty_grid() {
  double worst = 0.0;
  for (double mod : {0.0, 0.5, 1.0, 2.0, 3.0, 4.0}) {
    for (double arg : {0.0, kPi / 4, kPi / 2, kPi}) {
      for (double delta : {0.0, kPi / 3}) {
        CoherentSpec spec;
        spec.alpha = std::polar(mod, arg);
        spec.delta_phase = delta;
        const CoefficientSet c = coefficients(spec);
        const CoefficientSet d = annihilator_action(c, spec);
        for (int n = 0; n < c.size(); ++n)
          worst = std::max(worst, std::abs(d.c[n] - spec.alpha * c.c[n]));
      }
    }
  }
  return worst;
}

double spinor_norm(const CoherentSpec& spec, const FieldFrame& frame) {
  const auto& rule = oracle::gauss_hermite_cached(160);
  const double c = frame.xi_scale();
  double sum = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    const double x = frame.x_of_xi(rule.nodes[i]);
    const auto sp = coherent_spinor(spec, x, frame);
    sum += rule.scaled_weights[i] * (std::norm(sp[0]) + std::norm(sp[1]));
  }
  return std::abs(sum / c - 1.0);
}

// Coherent static matrix vs the basis expansion assembled entry by entry.
double coherent_basis_oracle(const CoherentSpec& spec, const FieldFrame& frame, int samples) {
  const CoherentWigner w(spec, frame);
  const auto& u = w.upper();
  const auto& v = w.lower();
  const GridSpec g = default_coherent_grid(spec, frame, samples);
  const double ls = spec.lambda >= 0 ? 1.0 : -1.0;
  const cplx I{0.0, 1.0};
  double worst = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.npx; ++j) {
      const auto p = PhaseSpacePoint::physical(g.x(i), g.px(j), frame);
      Matrix2c ref = Matrix2c::Zero();
      for (std::size_t a = 0; a < v.size(); ++a) {
        for (std::size_t b = 0; b < v.size(); ++b) {
          const cplx cross = wigner_cross(static_cast<int>(a), static_cast<int>(b), p.chi);
          if (a < u.size() && b < u.size()) ref(0, 0) += u[a] * std::conj(u[b]) * cross;
          if (a < u.size()) ref(0, 1) += -I * ls * u[a] * std::conj(v[b]) * cross;
          ref(1, 1) += v[a] * std::conj(v[b]) * cross;
        }
      }
      ref(1, 0) = std::conj(ref(0, 1));
      worst = std::max(worst, (w(p) - ref).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double evolved_t0_vs_static(const CoherentSpec& spec, const FieldFrame& frame, int samples) {
  const CoherentWigner st(spec, frame);
  const CoherentWigner ev(spec, frame, 0.0);
  const GridSpec g = default_evolve_grid(spec, frame, samples);
  double worst = 0.0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.npx; ++j) {
      const auto p = PhaseSpacePoint::physical(g.x(i), g.px(j), frame);
      worst = std::max(worst, (st(p) - ev(p)).cwiseAbs().maxCoeff());
    }
  return worst;
}

// Evolved matrix vs direct quadrature of the time-evolved spinor, whose
// Landau-basis phases are formed here from the spectrum.
double evolved_vs_quadrature(const CoherentSpec& spec, const FieldFrame& frame, double t_prime,
                             int samples) {
  const CoefficientSet c = coefficients(spec);
  const int N = c.size() - 1;
  const double t = t_prime * frame.vf_eff * std::sqrt(2.0 * frame.B);
  std::vector<cplx> ct(c.c.size());
  for (int n = 0; n <= N; ++n) ct[n] = c.c[n] * std::polar(1.0, -landau_energy(n, 1, frame) * t);
  const double r = std::sqrt(0.5);
  const double lam = spec.lambda >= 0 ? 1.0 : -1.0;
  const oracle::WaveFunction upper = [&](double x) {
    const auto psi = oscillator_psi_all(N, x, frame);
    cplx s = 0.0;
    for (int m = 0; m < N; ++m) s += r * ct[m + 1] * psi[m];
    return s;
  };
  const oracle::WaveFunction lower = [&](double x) {
    const auto psi = oscillator_psi_all(N, x, frame);
    cplx s = ct[0] * psi[0];
    for (int n = 1; n <= N; ++n) s += r * ct[n] * psi[n];
    return cplx{0.0, lam} * s;
  };
  const CoherentWigner ev(spec, frame, t_prime);
  const double radius = std::numbers::sqrt2 * std::abs(spec.alpha_tilde());
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    for (int j = 0; j < samples; ++j) {
      const double xi = -radius - 1.0 + (2.0 * radius + 2.0) * i / (samples - 1);
      const double s = -radius - 1.0 + (2.0 * radius + 2.0) * j / (samples - 1);
      const auto p = PhaseSpacePoint::scaled(xi, s, frame);
      const Matrix2c ref = oracle::spinor_wigner_integral(upper, lower, p.x, p.px, frame);
      worst = std::max(worst, (ev(p) - ref).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

// [Theta^-, Theta^+] on the truncated basis: deviation from the identity on
// indices 2..N-2, plus the two lowest diagonal entries.
struct CommutatorResult {
  double bulk = 0.0;
  double d0 = 0.0;
  double d1 = 0.0;
};

CommutatorResult commutator(int N) {
  const Eigen::MatrixXcd a = annihilator_matrix(N, 0.7);
  const Eigen::MatrixXcd c = a * a.adjoint() - a.adjoint() * a;
  CommutatorResult r;
  for (int i = 2; i <= N - 2; ++i)
    for (int j = 2; j <= N - 2; ++j)
      r.bulk = std::max(r.bulk, std::abs(c(i, j) - (i == j ? 1.0 : 0.0)));
  r.d0 = c(0, 0).real();
  r.d1 = c(1, 1).real();
  return r;
}

// theta^- = (xi + d_xi)/sqrt 2 and theta^+ = (xi - d_xi)/sqrt 2 on a fine xi
// grid; L2 error against sqrt(n) h_{n-1} and sqrt(n+1) h_{n+1}.
double ladder_error(int nmax) {
  const int n_pts = 4001;
  const double L = 12.0;
  double worst = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    const auto f = oracle::GridFunction<double>::sample(n_pts, -L, L, 5, -1.0, 1.0,
                                                         [n](double xi, double) { return hermite_function(n, xi); });
    const auto d = oracle::fd_apply(oracle::Derivative::First, f, oracle::Axis::U);
    double err_minus = 0.0;
    double err_plus = 0.0;
    for (int i = 0; i < n_pts; ++i) {
      const double xi = f.u(i);
      const double lower = (xi * f(i, 2) + d(i, 2)) / std::numbers::sqrt2;
      const double upper = (xi * f(i, 2) - d(i, 2)) / std::numbers::sqrt2;
      const double em = lower - (n > 0 ? std::sqrt(n) * hermite_function(n - 1, xi) : 0.0);
      const double ep = upper - std::sqrt(n + 1.0) * hermite_function(n + 1, xi);
      err_minus += em * em;
      err_plus += ep * ep;
    }
    worst = std::max({worst, std::sqrt(err_minus * f.hu), std::sqrt(err_plus * f.hu)});
  }
  return worst;
}

struct TextbookComparison {
  double diagonal_error = 0.0;   // max |diag(2^{1-d0n} W_n) - textbook Laguerre solution|
  double offdiag_difference = 0.0;  // max |W12 - textbook W12|
};

TextbookComparison textbook_vs_core(int nmax) {
  TextbookComparison r;
  for (int n = 1; n <= nmax; ++n) {
    for (int i = 0; i <= 32; ++i) {
      for (int j = 0; j <= 32; ++j) {
        const double xi = -4.0 + 0.25 * i;
        const double s = -4.0 + 0.25 * j;
        const cplx chi = std::numbers::sqrt2 * cplx{xi, s};
        const double x = std::norm(chi);
        const double up = ((n - 1) % 2 == 0 ? 1.0 : -1.0) * std::exp(-0.5 * x) *
                          std::laguerre(static_cast<unsigned>(n - 1), x) / kPi;
        const double lo = (n % 2 == 0 ? 1.0 : -1.0) * std::exp(-0.5 * x) *
                          std::laguerre(static_cast<unsigned>(n), x) / kPi;
        const Matrix2c w = 2.0 * wigner_landau(n, PhaseSpacePoint{0.0, 0.0, xi, s, chi});
        r.diagonal_error = std::max({r.diagonal_error, std::abs(w(0, 0) - up), std::abs(w(1, 1) - lo)});
        r.offdiag_difference = std::max(r.offdiag_difference, std::abs(w(0, 1) - up));
      }
    }
  }
  return r;
}

double star_convergence(int n, const FieldFrame& frame) {
  const auto coarse = star_genvalue_report(n, frame, kDefaultHalfWidth, 201);
  const auto fine = star_genvalue_report(n, frame, kDefaultHalfWidth, 401);
  return coarse.residual_h1 / fine.residual_h1;
}

}  // namespace

VerifyLevel parse_level(const std::string& text) {
  if (text == "quick") return VerifyLevel::Quick;
  if (text == "full") return VerifyLevel::Full;
  throw ConfigError("verify level must be 'quick' or 'full'");
}

bool VerifyReport::passed() const { return failures() == 0; }

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
    return !c.passed && !c.informational;
  }));
}

nlohmann::json to_json(const StarGenvalueReport& r) {
  return {{"state", r.state},
          {"n", r.n},
          {"residual_h1", r.residual_h1},
          {"residual_h2", r.residual_h2},
          {"expected", {{"energy", r.energy}, {"e1", r.expected_e1}, {"e2", r.expected_e2}}},
          {"measured", {{"e1", r.measured_e1}, {"e2", r.measured_e2}}},
          {"grid", {{"n", r.grid_n}, {"half_width", r.half_width}, {"spacing", r.spacing}}}};
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"measured", c.measured},
                           {"tolerance", c.tolerance},
                           {"informational", c.informational},
                           {"errored", c.errored},
                           {"detail", c.detail}});
  }
  nlohmann::json star = nlohmann::json::array();
  for (const auto& r : star_reports) star.push_back(verify::to_json(r));
  return {{"level", level},
          {"passed", passed()},
          {"failures", failures()},
          {"seconds", seconds},
          {"checks", checks_json},
          {"star_genvalue", star}};
}

VerifyReport run_verify(VerifyLevel level) {
  const auto start = std::chrono::steady_clock::now();
  const bool full = level == VerifyLevel::Full;
  VerifyReport report;
  report.level = full ? "full" : "quick";
  Runner run(report);

  const FieldFrame zig = strained_frame(StrainDirection::Zigzag, 0.2);

  run.below("oracle_equivalence", oracle::kOracleTolerance,
            [&] { return oracle_equivalence(full ? 8 : 4, full ? 41 : 11, zig); },
            full ? "levels <= 8, 41x41 over xi,s in [-4,4]" : "levels <= 4, 11x11 over xi,s in [-4,4]");

  run.below("spectrum_consistency", 1e-12, [&] { return spectrum_consistency(20, zig); },
            "sqrt(omega_B n) vs sqrt(2 n B), n <= 20, relative");

  run.below("landau_normalization", 2e-3, [&] { return landau_normalization(3, zig); },
            "n <= 3, default grid");
  run.below("landau_marginals", 1e-6, [&] { return landau_marginals(3, zig); },
            "x and px marginals, n <= 3, L-infinity");

  CoherentSpec fig6;
  fig6.alpha = std::polar(3.0, kPi / 4);
  run.below("coherent_normalization", 2e-3, [&] { return coherent_normalization(fig6, zig); },
            "alpha = 3 e^{i pi/4}");
  run.below("coherent_eigenproperty", 1e-12, [&] { return eigenproperty_grid(); },
            "|alpha| <= 4, four phases, delta in {0, pi/3}");
  run.below("coherent_spinor_norm", 1e-8, [&] { return spinor_norm(fig6, zig); });
  run.below("coherent_basis_oracle", 1e-8,
            [&] { return coherent_basis_oracle(fig6, zig, full ? 21 : 7); });

  CoherentSpec fig7;
  fig7.alpha = std::polar(3.0, -kPi / 2);
  run.below("evolved_t0_vs_static", 1e-12,
            [&] { return evolved_t0_vs_static(fig7, zig, full ? 41 : 11); });
  for (double tp : full ? std::vector<double>{5.0, 30.0} : std::vector<double>{5.0}) {
    run.below("evolved_vs_quadrature t'=" + fmt(tp), oracle::kOracleTolerance,
              [&] { return evolved_vs_quadrature(fig7, zig, tp, full ? 7 : 4); });
  }

  const CommutatorResult comm = commutator(40);
  run.below("commutator_bulk", 1e-12, [&] { return comm.bulk; }, "indices 2..N-2");
  run.below("commutator_low_levels", 1e-12,
            [&] { return std::max(std::abs(comm.d0 - 0.5), std::abs(comm.d1 - 1.5)); },
            "diagonal (0,0) = 1/2 and (1,1) = 3/2 under the basis action");
  run.below("ladder_operators", 1e-6, [&] { return ladder_error(full ? 20 : 8); });

  for (int n = 0; n <= (full ? 5 : 3); ++n) {
    run.below("star_genvalue n=" + std::to_string(n), 1e-4, [&] {
      const auto r = star_genvalue_report(n, zig);
      report.star_reports.push_back(r);
      return std::max(r.residual_h1, r.residual_h2);
    });
  }
  for (int n : full ? std::vector<int>{1, 2, 3} : std::vector<int>{2}) {
    run.above("star_convergence n=" + std::to_string(n), 8.0,
              [&] { return star_convergence(n, zig); }, "residual ratio on halved spacing");
  }
  for (int n = 1; n <= (full ? 5 : 3); ++n) {
    RealPartReport rr;
    run.below("realpart_h1 n=" + std::to_string(n), 1e-4, [&] {
      rr = realpart_reconciliation(n, zig);
      return rr.residual_h1;
    });
    run.below("realpart_h2 n=" + std::to_string(n), 1e-4, [&] { return rr.residual_h2; },
              "H2 Re W = -(omega_B/2) Im W");
    run.info("realpart_h2_zero_claim n=" + std::to_string(n), [&] { return rr.h2_zero_claim; },
             "||H2 Re W|| relative; the vanishing claim does not hold");
  }
  const TextbookComparison textbook = textbook_vs_core(full ? 8 : 4);
  run.below("textbook_diagonals_match_core", 1e-12, [&] { return textbook.diagonal_error; });
  run.above("textbook_offdiagonals_differ", 1e-6, [&] { return textbook.offdiag_difference; });

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace strainwig::verify
