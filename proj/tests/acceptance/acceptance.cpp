// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "strainwig/analysis.hpp"
#include "strainwig/errors.hpp"
#include "strainwig/fault_injection.hpp"
#include "strainwig/grid_kernels.hpp"
#include "strainwig/oracle/quadrature.hpp"
#include "strainwig/verify/moyal_verifier.hpp"
#include "strainwig/verify/suite.hpp"
#include "strainwig/wigner_core.hpp"

using namespace strainwig;

namespace {

constexpr double kPi = std::numbers::pi;

// Tolerances.
constexpr double kOracleTol = 1e-9;
constexpr double kOracleSeconds = 30.0;
constexpr double kNormTol = 2e-3;
constexpr double kMarginalTol = 1e-6;
constexpr double kStarResidualTol = 1e-4;
constexpr double kStarConvergence = 8.0;
constexpr double kSpectrumTol = 1e-12;
constexpr double kEigenTol = 1e-12;
constexpr double kSpinorNormTol = 1e-8;
constexpr double kIsotropicTol = 0.02;
constexpr double kAnisotropicMin = 0.05;
constexpr double kRotationTol = 1e-6;
constexpr double kPositiveFloor = -1e-12;
constexpr double kNegativeCeil = -1e-3 / kPi;
constexpr double kStaticMatchTol = 1e-12;
constexpr double kContourRadiusSpread = 0.25;
constexpr double kEvolveNegativeCeil = -1e-3 / kPi;
constexpr double kDecayRatio = 0.5;
constexpr double kEvolveSeconds = 300.0;
constexpr double kFaultEta = 1e-6;

// Frozen from the reference run at 201x201, N = 62.
constexpr double kRefMaxTrace0 = 0.3136;
constexpr double kRefMaxTrace60 = 0.1238;
constexpr double kRefMaxTrace540 = 0.1357;
constexpr double kRefTraceTol = 2e-3;

struct Outcome {
  bool passed = true;
  std::string detail;
};

int failures = 0;

class Detail {
public:
  template <class T>
  Detail& operator()(const std::string& key, const T& v) {
    if (!os_.str().empty()) os_ << ", ";
    os_ << key << "=" << v;
    return *this;
  }
  std::string str() const { return os_.str(); }

private:
  std::ostringstream os_;
};

void report(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail = std::string("threw: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.passed) ++failures;
  std::printf("%s  %-28s %s [%.1f s]\n", o.passed ? "PASS" : "FAIL", name.c_str(),
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

FieldFrame frame(StrainDirection d, double eps) {
  StrainConfig c;
  c.direction = d;
  c.epsilon = eps;
  return FieldFrame::make(1.0, 0.0, cone_parameters(c));
}

CoherentSpec coherent(double mod, double arg, double delta = 0.0) {
  CoherentSpec s;
  s.alpha = std::polar(mod, arg);
  s.delta_phase = delta;
  return s;
}

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const FieldFrame f = frame(StrainDirection::Zigzag, 0.2);
  const int n = 41;
  double worst = 0.0;
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      const oracle::WaveFunction fa = [&f, a](double x) { return cplx{oscillator_psi(a, x, f), 0.0}; };
      const oracle::WaveFunction fb = [&f, b](double x) { return cplx{oscillator_psi(b, x, f), 0.0}; };
      std::vector<double> row(n, 0.0);
#pragma omp parallel for schedule(dynamic)
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const auto p = PhaseSpacePoint::scaled(-4.0 + 0.2 * i, -4.0 + 0.2 * j, f);
          const cplx q = oracle::wigner_integral(fa, fb, p.x, p.px, f);
          row[i] = std::max(row[i], std::abs(wigner_cross(a, b, p.chi) - q));
        }
      }
      worst = std::max(worst, *std::max_element(row.begin(), row.end()));
    }
  }
  const double secs = seconds_since(start);
  return {worst < kOracleTol && secs < kOracleSeconds,
          Detail()("max_err", worst)("tol", kOracleTol)("seconds", secs).str()};
}

// Max deviation of the x and px marginals of Tr W from the spinor densities.
double marginal_error(const WignerField& w, const std::function<double(double)>& rho_x,
                      const std::function<double(double)>& rho_px) {
  const GridSpec& g = w.grid;
  double worst = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    double s = 0.0;
    for (int j = 0; j < g.npx; ++j) s += w.trace(i, j);
    worst = std::max(worst, std::abs(s * g.dpx - rho_x(g.x(i))));
  }
  for (int j = 0; j < g.npx; ++j) {
    double s = 0.0;
    for (int i = 0; i < g.nx; ++i) s += w.trace(i, j);
    worst = std::max(worst, std::abs(s * g.dx - rho_px(g.px(j))));
  }
  return worst;
}

// Momentum density of sum_n c_n psi_n from the oscillator functions in momentum,
// which carry the phase (-i)^n.
double momentum_density(const std::vector<cplx>& c, double px, const FieldFrame& f) {
  cplx s{0.0, 0.0};
  cplx phase{1.0, 0.0};
  for (std::size_t n = 0; n < c.size(); ++n) {
    s += c[n] * phase * oscillator_phi(static_cast<int>(n), px, f);
    phase *= cplx{0.0, -1.0};
  }
  return std::norm(s);
}

Outcome normalization_and_marginals() {
  double norm_err = 0.0;
  double marg_err = 0.0;
  for (auto d : {StrainDirection::Zigzag, StrainDirection::Armchair}) {
    for (double eps : {0.0, 0.1, 0.2}) {
      const FieldFrame f = frame(d, eps);
      for (int n = 0; n <= 3; ++n) {
        const WignerField w = landau_field(n, f, default_landau_grid(f));
        norm_err = std::max(norm_err, std::abs(field_stats(w).trace_integral - 1.0));
        const double scale = n == 0 ? 1.0 : 0.5;
        auto rho_x = [&](double x) {
          const double up = n > 0 ? oscillator_psi(n - 1, x, f) : 0.0;
          const double lo = oscillator_psi(n, x, f);
          return scale * (up * up + lo * lo);
        };
        auto rho_p = [&](double px) {
          const double up = n > 0 ? oscillator_phi(n - 1, px, f) : 0.0;
          const double lo = oscillator_phi(n, px, f);
          return scale * (up * up + lo * lo);
        };
        marg_err = std::max(marg_err, marginal_error(w, rho_x, rho_p));
      }
      for (double mod : {0.0, 1.0, 2.0, 3.0}) {
        for (double arg : {kPi / 4, -kPi / 2}) {
          const CoherentSpec s = coherent(mod, arg);
          const WignerField w = coherent_field(s, f, default_coherent_grid(s, f));
          norm_err = std::max(norm_err, std::abs(field_stats(w).trace_integral - 1.0));
          const CoherentWigner cw(s, f);
          auto rho_x = [&](double x) {
            const auto sp = coherent_spinor(s, x, f);
            return std::norm(sp[0]) + std::norm(sp[1]);
          };
          auto rho_p = [&](double px) {
            return momentum_density(cw.upper(), px, f) + momentum_density(cw.lower(), px, f);
          };
          marg_err = std::max(marg_err, marginal_error(w, rho_x, rho_p));
        }
      }
    }
  }
  return {norm_err <= kNormTol && marg_err < kMarginalTol,
          Detail()("norm_err", norm_err)("tol", kNormTol)("marginal_err", marg_err)("tol", kMarginalTol)
              .str()};
}

Outcome star_genvalue() {
  const FieldFrame f = frame(StrainDirection::Zigzag, 0.2);
  double residual = 0.0;
  for (int n = 0; n <= 5; ++n) {
    const auto r = verify::star_genvalue_report(n, f);
    residual = std::max({residual, r.residual_h1, r.residual_h2});
  }
  double worst_ratio = 1e300;
  for (int n : {1, 2, 3}) {
    const double coarse = verify::star_genvalue_report(n, f, verify::kDefaultHalfWidth, 201).residual_h1;
    const double fine = verify::star_genvalue_report(n, f, verify::kDefaultHalfWidth, 401).residual_h1;
    worst_ratio = std::min(worst_ratio, coarse / fine);
  }
  double spectrum = 0.0;
  for (auto d : {StrainDirection::Zigzag, StrainDirection::Armchair})
    for (double eps : {0.0, 0.1, 0.2}) {
      const FieldFrame g = frame(d, eps);
      for (int n = 1; n <= 20; ++n) {
        const double e = landau_energy(n, 1, g);
        spectrum = std::max(spectrum, std::abs(verify::star_genvalue_energy(n, g) - e) / e);
      }
    }
  return {residual < kStarResidualTol && worst_ratio >= kStarConvergence && spectrum <= kSpectrumTol,
          Detail()("residual", residual)("tol", kStarResidualTol)("convergence", worst_ratio)(
              "min", kStarConvergence)("energy_rel_err", spectrum)("tol", kSpectrumTol)
              .str()};
}

Outcome eigenproperty() {
  double worst = 0.0;
  for (double mod : {0.0, 0.5, 1.0, 2.0, 3.0, 4.0})
    for (double arg : {0.0, kPi / 4, -kPi / 2, 2.0})
      for (double delta : {0.0, 0.5, -1.2}) {
        const CoherentSpec s = coherent(mod, arg, delta);
        const CoefficientSet c = coefficients(s);
        const CoefficientSet a = annihilator_action(c, s);
        for (int n = 0; n + 1 < c.size(); ++n) worst = std::max(worst, std::abs(a.c[n] - s.alpha * c.c[n]));
      }
  double norm_err = 0.0;
  const auto& rule = oracle::gauss_hermite_cached(200);
  for (auto d : {StrainDirection::Zigzag, StrainDirection::Armchair})
    for (double eps : {0.0, 0.2})
      for (double mod : {0.5, 3.0, 4.0}) {
        const FieldFrame f = frame(d, eps);
        const CoherentSpec s = coherent(mod, 1.1, 0.3);
        double sum = 0.0;
        for (int i = 0; i < rule.order; ++i) {
          const auto sp = coherent_spinor(s, f.x_of_xi(rule.nodes[i]), f);
          sum += rule.scaled_weights[i] * (std::norm(sp[0]) + std::norm(sp[1]));
        }
        norm_err = std::max(norm_err, std::abs(sum / f.xi_scale() - 1.0));
      }
  return {worst <= kEigenTol && norm_err <= kSpinorNormTol,
          Detail()("eigen_err", worst)("tol", kEigenTol)("spinor_norm_err", norm_err)("tol", kSpinorNormTol)
              .str()};
}

Outcome strain_physics() {
  Detail d;
  bool ok = true;

  // sqrt(ab) < 1 on (0, 0.25] in both directions.
  for (auto dir : {StrainDirection::Zigzag, StrainDirection::Armchair}) {
    double max_vf = 0.0;
    std::string gap = "none";
    for (int k = 1; k <= 250; ++k) {
      const double eps = 0.001 * k;
      try {
        max_vf = std::max(max_vf, frame(dir, eps).vf_eff);
      } catch (const GapOpenedError& e) {
        gap = std::to_string(e.epsilon());
        ok = false;
        break;
      }
    }
    if (max_vf >= 1.0) ok = false;
    const std::string tag = dir == StrainDirection::Zigzag ? "Z" : "A";
    d("max_vf_" + tag, max_vf)("gap_at_" + tag, gap);
  }

  // |a_Z - b_A| / a_Z below 2% up to 0.10 and above 5% at 0.20.
  auto mismatch = [](double eps) {
    StrainConfig z, a;
    z.epsilon = a.epsilon = eps;
    a.direction = StrainDirection::Armchair;
    const double az = cone_parameters(z).a;
    return std::abs(az - cone_parameters(a).b) / az;
  };
  double worst_small = 0.0;
  for (int k = 1; k <= 10; ++k) worst_small = std::max(worst_small, mismatch(0.01 * k));
  const double at_020 = mismatch(0.2);
  if (!(worst_small < kIsotropicTol) || !(at_020 > kAnisotropicMin)) ok = false;
  d("aZ_bA_le_0.10", worst_small)("tol", kIsotropicTol)("aZ_bA_0.20", at_020)("min", kAnisotropicMin);

  // Coherent fields at 0.1 Z and 0.1 A related by the x <-> px exchange.
  const CoherentSpec s = coherent(3.0, kPi / 4);
  const FieldFrame fz = frame(StrainDirection::Zigzag, 0.1);
  const FieldFrame fa = frame(StrainDirection::Armchair, 0.1);
  const CoherentWigner wz(s, fz), wa(s, fa);
  const double swap = axis_swap_difference([&](const PhaseSpacePoint& p) { return wz(p); }, fz,
                                           [&](const PhaseSpacePoint& p) { return wa(p); }, fa,
                                           GridSpec::uniform(-8, 8, 121, -8, 8, 121));
  if (!(swap < kRotationTol)) ok = false;
  d("rotation_diff", swap)("tol", kRotationTol);
  return {ok, d.str()};
}

Outcome negativity_onset() {
  double min01 = 1e300;
  double max23 = -1e300;
  for (auto dir : {StrainDirection::Zigzag, StrainDirection::Armchair})
    for (double eps : {-0.2, 0.0, 0.1, 0.2}) {
      const FieldFrame f = frame(dir, eps);
      for (int n = 0; n <= 3; ++n) {
        const double m = field_stats(landau_field(n, f, default_landau_grid(f))).min_trace;
        if (n <= 1) min01 = std::min(min01, m);
        else max23 = std::max(max23, m);
      }
    }
  return {min01 >= kPositiveFloor && max23 < kNegativeCeil,
          Detail()("min_tr_n01", min01)("floor", kPositiveFloor)("min_tr_n23_worst", max23)("ceil", kNegativeCeil)
              .str()};
}

Outcome time_evolution() {
  const auto start = std::chrono::steady_clock::now();
  const CoherentSpec s = coherent(3.0, -kPi / 2);
  const FieldFrame f = frame(StrainDirection::Zigzag, 0.2);
  const GridSpec g = default_evolve_grid(s, f, kDefaultGridN);
  const std::vector<double> times = {0, 5, 10, 15, 20, 25, 30, 60, 540};

  std::vector<TraceSummary> rows;
  double static_diff = 0.0;
  for (double t : times) {
    const WignerField w = evolved_field(s, f, g, t);
    rows.push_back(summarize(w));
    if (t == 0.0) {
      const WignerField ref = coherent_field(s, f, g);
      const CoherentWigner evo(s, f, 0.0);
      WignerField alt(g);
      alt.meta.frame = f;
      fill_field(alt, evo);
      for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.npx; ++j)
          static_diff = std::max({static_diff, (w.at(i, j) - ref.at(i, j)).cwiseAbs().maxCoeff(),
                                  (alt.at(i, j) - ref.at(i, j)).cwiseAbs().maxCoeff()});
    }
  }
  const double secs = seconds_since(start);

  std::vector<double> raw;
  double rmin = 1e300, rmax = 0.0, rsum = 0.0, neg = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] > 30.0) continue;
    raw.push_back(rows[k].argmax_angle);
    rmin = std::min(rmin, rows[k].argmax_radius);
    rmax = std::max(rmax, rows[k].argmax_radius);
    rsum += rows[k].argmax_radius;
    if (times[k] >= 5.0) neg = std::min(neg, rows[k].min_trace);
  }
  const double rmean = rsum / raw.size();
  const std::vector<double> ang = unwrap_angles(raw);
  bool monotone = true;
  for (std::size_t k = 1; k < ang.size(); ++k)
    if (!(ang[k] < ang[k - 1])) monotone = false;
  const double spread = (rmax - rmin) / rmean;

  const double m0 = rows[0].max_trace;
  const double m60 = rows[7].max_trace;
  const double m540 = rows[8].max_trace;
  const bool frozen = std::abs(m0 - kRefMaxTrace0) < kRefTraceTol &&
                      std::abs(m60 - kRefMaxTrace60) < kRefTraceTol &&
                      std::abs(m540 - kRefMaxTrace540) < kRefTraceTol;
  const bool ok = static_diff <= kStaticMatchTol && monotone && spread < kContourRadiusSpread &&
                  neg < kEvolveNegativeCeil && m60 < kDecayRatio * m0 && m540 > m60 && frozen &&
                  secs < kEvolveSeconds;
  return {ok, Detail()("t0_vs_static", static_diff)("monotone_angle", monotone ? "yes" : "no")(
                  "radius_spread", spread)("min_tr_5_30", neg)("max_tr_0", m0)("max_tr_60", m60)(
                  "max_tr_540", m540)("order", s.order())("seconds", secs)
                  .str()};
}

Outcome mutation_sensitivity() {
  const verify::VerifyReport clean = verify::run_verify(verify::VerifyLevel::Quick);
  Detail d;
  d("clean", clean.passed() ? "pass" : "FAIL");
  bool ok = clean.passed();
  const std::pair<Fault, const char*> faults[] = {{Fault::LaguerreRecurrence, "laguerre"},
                                                  {Fault::AnmPhase, "anm_phase"},
                                                  {Fault::OmegaZeta, "omega_zeta"}};
  for (const auto& [fault, name] : faults) {
    ScopedFault guard(fault, kFaultEta);
    const verify::VerifyReport r = verify::run_verify(verify::VerifyLevel::Quick);
    d(name, std::to_string(r.failures()) + " failures");
    if (r.passed()) ok = false;
  }
  return {ok, d.str()};
}

}  // namespace

int main() {
  report("oracle_equivalence", oracle_equivalence);
  report("normalization_marginals", normalization_and_marginals);
  report("star_genvalue", star_genvalue);
  report("coherent_eigenproperty", eigenproperty);
  report("strain_physics", strain_physics);
  report("negativity_onset", negativity_onset);
  report("time_evolution", time_evolution);
  report("mutation_sensitivity", mutation_sensitivity);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
