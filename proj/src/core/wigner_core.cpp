#include "strainwig/wigner_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "strainwig/errors.hpp"
#include "strainwig/fault_injection.hpp"
#include "strainwig/grid_kernels.hpp"
#include "strainwig/special_functions.hpp"

namespace strainwig {

namespace {

constexpr double kInvPi = std::numbers::inv_pi;

cplx unit_phase(cplx chi) {
  const double r = std::abs(chi);
  return r > 0.0 ? chi / r : cplx{1.0, 0.0};
}

// Static W[psi', psi] of the un-normalised components, summed as a single
// series in (chi* - at*).
cplx upper_lower_series(cplx at, cplx chi) {
  const cplx z = at * (std::conj(chi) - std::conj(at));
  const double zabs = std::abs(z);
  // term_n = at^n sqrt(n) / n! (chi* - at*)^{n-1}; with q_n = z^{n-1}/n!,
  // term_n = at sqrt(n) q_n.
  cplx q = 1.0;  // n = 1
  cplx sum = 0.0;
  const int cap = 200 + static_cast<int>(4.0 * zabs);
  for (int n = 1; n <= cap; ++n) {
    const cplx term = std::sqrt(static_cast<double>(n)) * q;
    sum += term;
    if (n > zabs && std::abs(term) < 1e-18 * std::abs(sum)) break;
    q *= z / (n + 1.0);
  }
  const double x = std::norm(chi);
  return kInvPi * std::exp(-0.5 * x + std::conj(at) * chi) * at * sum;
}

}  // namespace

cplx wigner_cross(int a, int b, cplx chi) {
  if (a < 0 || b < 0) return 0.0;
  if (a > b) return std::conj(wigner_cross(b, a, chi));
  const int d = b - a;
  const double x = std::norm(chi);
  const double l = normalized_laguerre(a, d, x);
  const double sign = (a % 2 == 0) ? 1.0 : -1.0;
  return sign * kInvPi * std::pow(unit_phase(chi), d) * l;
}

cplx wigner_cross_sum(const std::vector<cplx>& u, const std::vector<cplx>& v, cplx chi,
                      bool include_diagonal) {
  const int lu = static_cast<int>(u.size());
  const int lv = static_cast<int>(v.size());
  const int lmax = std::max(lu, lv);
  if (lmax == 0) return 0.0;
  const double x = std::norm(chi);
  const cplx e = unit_phase(chi);

  std::vector<double> l(static_cast<std::size_t>(lmax));
  double l0 = std::exp(-0.5 * x);
  cplx phase = 1.0;
  cplx total = 0.0;
  for (int d = 0; d < lmax; ++d) {
    if (d > 0) {
      l0 *= std::sqrt(x / d);
      phase *= e;
    }
    const int jplus = std::min(lu, lv - d);   // u_j conj(v_{j+d})
    const int jminus = std::min(lu - d, lv);  // u_{j+d} conj(v_j)
    const int jmax = std::max(jplus, d > 0 ? jminus : 0);
    if (jmax <= 0) continue;
    normalized_laguerre_run(jmax - 1, d, x, l0, l.data());
    cplx splus = 0.0;
    cplx sminus = 0.0;
    if (d > 0 || include_diagonal) {
      for (int j = 0; j < jplus; ++j) {
        const double lj = (j % 2 == 0) ? l[j] : -l[j];
        splus += lj * u[j] * std::conj(v[j + d]);
      }
    }
    if (d > 0) {
      for (int j = 0; j < jminus; ++j) {
        const double lj = (j % 2 == 0) ? l[j] : -l[j];
        sminus += lj * u[j + d] * std::conj(v[j]);
      }
    }
    total += phase * splus + std::conj(phase) * sminus;
  }
  return kInvPi * total;
}

Matrix2c wigner_landau(int n, const PhaseSpacePoint& p, int lambda, int s) {
  if (n < 0) throw ConfigError("Landau level index must be non-negative");
  const double ls = (lambda >= 0 ? 1.0 : -1.0) * (s >= 0 ? 1.0 : -1.0);
  const cplx I{0.0, 1.0};
  Matrix2c m = Matrix2c::Zero();
  m(1, 1) = wigner_cross(n, n, p.chi);
  if (n == 0) return m;
  m(0, 0) = wigner_cross(n - 1, n - 1, p.chi);
  m(0, 1) = -I * ls * wigner_cross(n - 1, n, p.chi);
  m(1, 0) = I * ls * wigner_cross(n, n - 1, p.chi);
  return 0.5 * m;
}

double classical_energy(const PhaseSpacePoint& p, const FieldFrame& frame) {
  const double shifted = p.x + frame.x_shift();
  return std::exp(2.0 * frame.tau) * p.px * p.px + std::exp(-2.0 * frame.tau) * shifted * shifted;
}

double physical_time(double t_prime, const FieldFrame& frame) {
  return t_prime * frame.vf_eff * std::sqrt(2.0 * frame.B);
}

CoherentWigner::CoherentWigner(const CoherentSpec& spec, const FieldFrame& frame)
    : at_(spec.alpha_tilde()),
      lambda_(spec.lambda >= 0 ? 1 : -1),
      order_(spec.order()),
      c0_(coherent_c0(spec.alpha_tilde())),
      evolved_(false) {
  const CoefficientSet c = coefficients(spec);
  const double r = std::sqrt(0.5);
  upper_.resize(static_cast<std::size_t>(order_));
  lower_.resize(static_cast<std::size_t>(order_) + 1);
  for (int m = 0; m < order_; ++m) upper_[m] = r * c.c[m + 1];
  lower_[0] = c.c[0];
  for (int n = 1; n <= order_; ++n) lower_[n] = r * c.c[n];
  (void)frame;
}

CoherentWigner::CoherentWigner(const CoherentSpec& spec, const FieldFrame& frame,
                               double t_prime)
    : CoherentWigner(spec, frame) {
  if (!(t_prime >= 0.0) || !std::isfinite(t_prime))
    throw ConfigError("evolution time t' must be non-negative");
  evolved_ = true;
  const double t = physical_time(t_prime, frame) * fault_factor(Fault::AnmPhase);
  auto rotate = [&](cplx& amp, int level) {
    amp *= std::polar(1.0, -landau_energy(level, 1, frame) * t);
  };
  for (int m = 0; m < order_; ++m) rotate(upper_[m], m + 1);
  for (int n = 0; n <= order_; ++n) rotate(lower_[n], n);
}

Matrix2c CoherentWigner::static_matrix(const PhaseSpacePoint& p) const {
  const cplx I{0.0, 1.0};
  const double c02 = c0_ * c0_;
  const cplx w11 = wigner_cross_sum(upper_, upper_, p.chi);
  const cplx w12 = c02 * upper_lower_series(at_, p.chi);
  const double x = std::norm(p.chi);
  const double w22 = c02 * kInvPi * std::exp(0.5 * x - std::norm(p.chi - at_));
  Matrix2c m;
  m << w11, -I * static_cast<double>(lambda_) * w12, I * static_cast<double>(lambda_) * std::conj(w12),
      w22;
  return m;
}

Matrix2c CoherentWigner::evolved_matrix(const PhaseSpacePoint& p) const {
  const cplx I{0.0, 1.0};
  const double x = std::norm(p.chi);
  const cplx w11 = wigner_cross_sum(upper_, upper_, p.chi);
  const cplx w12 = wigner_cross_sum(upper_, lower_, p.chi);
  const double r = std::abs(at_);
  const double diag = c0_ * c0_ * kInvPi * std::exp(-0.5 * x - r * r) *
                      bessel_j0_imag(r * std::sqrt(x));
  const cplx w22 = diag + wigner_cross_sum(lower_, lower_, p.chi, false);
  Matrix2c m;
  m << w11, -I * static_cast<double>(lambda_) * w12, I * static_cast<double>(lambda_) * std::conj(w12),
      w22;
  return m;
}

Matrix2c CoherentWigner::operator()(const PhaseSpacePoint& p) const {
  return evolved_ ? evolved_matrix(p) : static_matrix(p);
}

Matrix2c wigner_coherent(const CoherentSpec& spec, const PhaseSpacePoint& p,
                         const FieldFrame& frame) {
  return CoherentWigner(spec, frame)(p);
}

Matrix2c wigner_coherent_evolved(const CoherentSpec& spec, const PhaseSpacePoint& p,
                                 const FieldFrame& frame, double t_prime) {
  return CoherentWigner(spec, frame, t_prime)(p);
}

GridSpec default_landau_grid(const FieldFrame& frame, int n) {
  return GridSpec::scaled_window(frame, 0.0, 0.0, 6.0, n);
}

GridSpec default_coherent_grid(const CoherentSpec& spec, const FieldFrame& frame, int n) {
  const cplx c = std::numbers::sqrt2 * spec.alpha_tilde();
  return GridSpec::scaled_window(frame, c.real(), c.imag(), 5.0, n);
}

GridSpec default_evolve_grid(const CoherentSpec& spec, const FieldFrame& frame, int n) {
  const double radius = std::numbers::sqrt2 * std::abs(spec.alpha_tilde());
  return GridSpec::scaled_window(frame, 0.0, 0.0, radius + 5.0, n);
}

namespace {

const char* sign_name(int v) { return v >= 0 ? "+" : "-"; }

}  // namespace

WignerField landau_field(int n, const FieldFrame& frame, const GridSpec& grid, int lambda,
                         int s) {
  WignerField f(grid);
  f.meta.frame = frame;
  f.meta.state = "landau n=" + std::to_string(n) + " lambda=" + sign_name(lambda) +
                 " s=" + sign_name(s);
  f.meta.order = n;
  fill_field(f, [&](const PhaseSpacePoint& p) { return wigner_landau(n, p, lambda, s); });
  return f;
}

WignerField coherent_field(const CoherentSpec& spec, const FieldFrame& frame,
                           const GridSpec& grid) {
  const CoherentWigner eval(spec, frame);
  WignerField f(grid);
  f.meta.frame = frame;
  f.meta.state = "coherent";
  f.meta.order = eval.order();
  fill_field(f, eval);
  return f;
}

WignerField evolved_field(const CoherentSpec& spec, const FieldFrame& frame, const GridSpec& grid,
                          double t_prime) {
  WignerField f(grid);
  f.meta.frame = frame;
  f.meta.state = "coherent-evolved";
  f.meta.t_prime = t_prime;
  if (t_prime == 0.0) {
    const CoherentWigner eval(spec, frame);
    f.meta.order = eval.order();
    fill_field(f, eval);
  } else {
    const CoherentWigner eval(spec, frame, t_prime);
    f.meta.order = eval.order();
    fill_field(f, eval);
  }
  return f;
}

}  // namespace strainwig
