#include "strainwig/strain_geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "strainwig/errors.hpp"

namespace strainwig {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

LatticeGeometry geometry_from_vectors(const Vec2& a1, const Vec2& a2, double a0, double t0) {
  LatticeGeometry g;
  g.a1 = a1;
  g.a2 = a2;
  g.a0 = a0;
  g.t0 = t0;
  g.delta[0] = (2.0 * a1 - a2) / 3.0;
  g.delta[1] = (2.0 * a2 - a1) / 3.0;
  g.delta[2] = -g.delta[0] - g.delta[1];
  for (int j = 0; j < 3; ++j) g.length[j] = g.delta[j].norm();
  return g;
}

LatticeGeometry lerp(const LatticeGeometry& from, const LatticeGeometry& to, double s) {
  LatticeGeometry g = to;
  g.a1 = (1.0 - s) * from.a1 + s * to.a1;
  g.a2 = (1.0 - s) * from.a2 + s * to.a2;
  for (int j = 0; j < 3; ++j) {
    g.delta[j] = (1.0 - s) * from.delta[j] + s * to.delta[j];
    g.hopping[j] = (1.0 - s) * from.hopping[j] + s * to.hopping[j];
    g.length[j] = g.delta[j].norm();
  }
  return g;
}

// Newton on (Re f, Im f) = 0. Returns the final residual |f|.
double newton_polish(const LatticeGeometry& g, Vec2& k, int max_iter) {
  double residual = std::abs(structure_factor(k, g));
  for (int it = 0; it < max_iter && residual > 1e-15 * g.t0; ++it) {
    std::complex<double> f{0.0, 0.0};
    std::complex<double> dfx{0.0, 0.0};
    std::complex<double> dfy{0.0, 0.0};
    for (int j = 0; j < 3; ++j) {
      const std::complex<double> term =
          g.hopping[j] * std::polar(1.0, -k.dot(g.delta[j]));
      f += term;
      dfx += std::complex<double>(0.0, -g.delta[j].x()) * term;
      dfy += std::complex<double>(0.0, -g.delta[j].y()) * term;
    }
    Mat2 jac;
    jac << dfx.real(), dfy.real(), dfx.imag(), dfy.imag();
    const double det = jac.determinant();
    if (std::abs(det) < 1e-300) break;
    const Vec2 step = jac.inverse() * Vec2(f.real(), f.imag());
    const Vec2 trial = k - step;
    const double trial_residual = std::abs(structure_factor(trial, g));
    // Near the merging point the root is double and Newton only converges
    // linearly; stop once it no longer improves.
    if (!(trial_residual < residual)) break;
    k = trial;
    residual = trial_residual;
  }
  return residual;
}

}  // namespace

std::string_view to_string(StrainDirection d) {
  return d == StrainDirection::Zigzag ? "zigzag" : "armchair";
}

StrainDirection parse_direction(std::string_view text) {
  const std::string t = lower(text);
  if (t == "zigzag" || t == "z") return StrainDirection::Zigzag;
  if (t == "armchair" || t == "a") return StrainDirection::Armchair;
  throw ConfigError("unknown strain direction '" + std::string(text) + "'");
}

void StrainConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw ConfigError(std::string(name) + " must be positive and finite");
  };
  positive(nu, "nu");
  positive(beta, "beta");
  positive(t0, "t0");
  positive(a0, "a0");
  if (!std::isfinite(epsilon) || std::abs(epsilon) > kMaxAbsStrain) {
    std::ostringstream os;
    os << "epsilon = " << epsilon << " outside the elastic range [-" << kMaxAbsStrain << ", "
       << kMaxAbsStrain << "]";
    throw ConfigError(os.str());
  }
}

ConeParameters ConeParameters::pristine() { return ConeParameters{}; }

Mat2 strain_tensor(const StrainConfig& cfg) {
  cfg.validate();
  Mat2 m = Mat2::Zero();
  if (cfg.direction == StrainDirection::Zigzag) {
    m(0, 0) = 1.0;
    m(1, 1) = -cfg.nu;
  } else {
    m(0, 0) = -cfg.nu;
    m(1, 1) = 1.0;
  }
  return cfg.epsilon * m;
}

std::pair<Vec2, Vec2> lattice_vectors(const StrainConfig& cfg) {
  cfg.validate();
  const double along = 1.0 + cfg.epsilon;
  const double across = 1.0 - cfg.nu * cfg.epsilon;
  const double sx = cfg.direction == StrainDirection::Zigzag ? along : across;
  const double sy = cfg.direction == StrainDirection::Zigzag ? across : along;
  const Vec2 a1(kSqrt3 * cfg.a0 * sx, 0.0);
  const Vec2 a2(0.5 * kSqrt3 * cfg.a0 * sx, 0.5 * kSqrt3 * cfg.a0 * kSqrt3 * sy);
  return {a1, a2};
}

std::array<double, 3> bond_lengths(const StrainConfig& cfg) {
  cfg.validate();
  const double e = cfg.epsilon;
  const double nu = cfg.nu;
  const double shear = 3.0 / 16.0 * (1.0 + nu) * (1.0 + nu) * e * e;
  double d1 = 0.0;
  double d2 = 0.0;
  if (cfg.direction == StrainDirection::Zigzag) {
    const double lin = 1.0 + 0.25 * (3.0 - nu) * e;
    d1 = cfg.a0 * std::sqrt(lin * lin + shear);
    d2 = cfg.a0 * (1.0 - nu * e);
  } else {
    const double lin = 1.0 + 0.25 * (1.0 - 3.0 * nu) * e;
    d1 = cfg.a0 * std::sqrt(lin * lin + shear);
    d2 = cfg.a0 * (1.0 + e);
  }
  return {d1, d2, d1};
}

std::array<double, 3> hoppings(const StrainConfig& cfg, const std::array<double, 3>& lengths) {
  std::array<double, 3> t{};
  for (int j = 0; j < 3; ++j) {
    if (!(lengths[j] > 0.0)) throw ConfigError("bond lengths must be positive");
    t[j] = cfg.t0 * std::exp(-cfg.beta * (lengths[j] / cfg.a0 - 1.0));
  }
  return t;
}

LatticeGeometry make_geometry(const StrainConfig& cfg) {
  const auto [a1, a2] = lattice_vectors(cfg);
  LatticeGeometry g = geometry_from_vectors(a1, a2, cfg.a0, cfg.t0);
  g.epsilon = cfg.epsilon;
  g.length = bond_lengths(cfg);
  g.hopping = hoppings(cfg, g.length);
  return g;
}

LatticeGeometry pristine_geometry(double a0, double t0) {
  StrainConfig cfg;
  cfg.a0 = a0;
  cfg.t0 = t0;
  return make_geometry(cfg);
}

Vec2 pristine_k_point(double a0) {
  return Vec2(4.0 * std::numbers::pi / (3.0 * kSqrt3 * a0), 0.0);
}

std::complex<double> structure_factor(const Vec2& k, const LatticeGeometry& geom) {
  std::complex<double> f{0.0, 0.0};
  for (int j = 0; j < 3; ++j) f += geom.hopping[j] * std::polar(1.0, -k.dot(geom.delta[j]));
  return f;
}

double band_energy(const Vec2& k, const LatticeGeometry& geom, int s) {
  return (s >= 0 ? 1.0 : -1.0) * std::abs(structure_factor(k, geom));
}

void require_gapless(const LatticeGeometry& geom) {
  const double t1 = std::abs(geom.hopping[0]);
  const double t2 = std::abs(geom.hopping[1]);
  // Relative slack so a geometry built to sit exactly on the merging point
  // is not rejected by rounding in the exponentials.
  if (t2 > 2.0 * t1 * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "Dirac points merged (gap opened) at epsilon = " << geom.epsilon
       << ": t2/t1 = " << t2 / t1 << " > 2";
    throw GapOpenedError(os.str(), geom.epsilon);
  }
}

Vec2 dirac_point(const LatticeGeometry& geom) {
  require_gapless(geom);
  LatticeGeometry start = pristine_geometry(geom.a0, geom.t0);
  Vec2 k = pristine_k_point(geom.a0);

  constexpr int kSteps = 64;
  for (int step = 1; step <= kSteps; ++step) {
    const double s = static_cast<double>(step) / kSteps;
    newton_polish(lerp(start, geom, s), k, 60);
  }
  const double residual = newton_polish(geom, k, 200);
  if (residual > 1e-10 * geom.t0) {
    std::ostringstream os;
    os << "Dirac-point continuation failed at epsilon = " << geom.epsilon
       << " (residual " << residual << ")";
    throw GapOpenedError(os.str(), geom.epsilon);
  }
  return k;
}

ConeParameters cone_parameters(const LatticeGeometry& geom, const Vec2& dirac) {
  require_gapless(geom);
  const double t1 = geom.hopping[0];
  const double t2 = geom.hopping[1];
  const double pref = 2.0 / (3.0 * geom.a0 * geom.t0);

  const double ra = geom.a1.x() * geom.a1.x() * t1 * t1 +
                    (geom.a2.x() - geom.a1.x()) * geom.a2.x() * t2 * t2;
  const double rb = geom.a1.y() * geom.a1.y() * t1 * t1 +
                    (geom.a2.y() - geom.a1.y()) * geom.a2.y() * t2 * t2;
  if (ra < 0.0 || rb < 0.0) {
    std::ostringstream os;
    os << "cone parameters undefined at epsilon = " << geom.epsilon << " (gap opened)";
    throw GapOpenedError(os.str(), geom.epsilon);
  }

  ConeParameters c;
  c.a = pref * std::sqrt(ra);
  c.b = pref * std::sqrt(rb);

  double a_sum = 0.0;
  double b_sum = 0.0;
  for (int j = 0; j < 3; ++j) {
    const double phase = dirac.dot(geom.delta[j]);
    const double tj = geom.hopping[j] / geom.t0;
    a_sum += geom.delta[j].x() / geom.a0 * tj * std::sin(phase);
    b_sum += geom.delta[j].y() / geom.a0 * tj * std::cos(phase);
  }
  c.a_sum = 2.0 / 3.0 * a_sum;
  c.b_sum = 2.0 / 3.0 * b_sum;

  if (!(c.a > 0.0) || !(c.b > 0.0)) {
    std::ostringstream os;
    os << "degenerate Dirac cone at epsilon = " << geom.epsilon;
    throw GapOpenedError(os.str(), geom.epsilon);
  }
  c.zeta = c.a / c.b;
  c.vf_eff = std::sqrt(c.a * c.b);
  c.dirac_point = dirac;
  return c;
}

ConeParameters cone_parameters(const StrainConfig& cfg) {
  const LatticeGeometry g = make_geometry(cfg);
  return cone_parameters(g, dirac_point(g));
}

}  // namespace strainwig
