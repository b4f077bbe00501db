#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

namespace strainwig {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

enum class StrainDirection { Zigzag, Armchair };

std::string_view to_string(StrainDirection d);
/// Accepts "zigzag"/"z" and "armchair"/"a" (case-insensitive).
StrainDirection parse_direction(std::string_view text);

/// Uniaxial strain along one of the two high-symmetry directions, plus the
/// material constants of the nearest-neighbour tight-binding model.
struct StrainConfig {
  StrainDirection direction = StrainDirection::Zigzag;
  double epsilon = 0.0;
  double nu = 0.165;    // Poisson ratio
  double beta = 3.37;   // Grüneisen constant
  double t0 = 1.0;      // pristine hopping
  double a0 = 1.0;      // pristine bond length

  static constexpr double kMaxAbsStrain = 0.3;

  /// Throws ConfigError when a constant is non-positive or |epsilon| > 0.3.
  void validate() const;
};

/// Deformed honeycomb lattice. delta[j] are the nearest-neighbour vectors,
/// length[j] = |delta[j]|, hopping[j] the corresponding amplitudes.
struct LatticeGeometry {
  Vec2 a1{Vec2::Zero()};
  Vec2 a2{Vec2::Zero()};
  std::array<Vec2, 3> delta{};
  std::array<double, 3> length{};
  std::array<double, 3> hopping{};
  double t0 = 1.0;
  double a0 = 1.0;
  double epsilon = 0.0;  // carried for error reporting only
};

/// Dirac-cone anisotropy. a, b come from the lattice-vector closed form;
/// a_sum, b_sum from the direct sums over bonds (independent cross-check).
struct ConeParameters {
  double a = 1.0;
  double b = 1.0;
  double zeta = 1.0;    // a / b
  double vf_eff = 1.0;  // sqrt(a b), in units of vF
  Vec2 dirac_point{Vec2::Zero()};
  double a_sum = 1.0;
  double b_sum = 1.0;

  static ConeParameters pristine();
};

/// eps * diag(1, -nu) for zigzag, eps * diag(-nu, 1) for armchair.
Mat2 strain_tensor(const StrainConfig& cfg);

std::pair<Vec2, Vec2> lattice_vectors(const StrainConfig& cfg);

/// Closed-form deformed bond lengths (d1 = d3 for quinoid deformations).
std::array<double, 3> bond_lengths(const StrainConfig& cfg);

/// Exponential decay rule t_j = t0 * exp(-beta (d_j/a0 - 1)).
std::array<double, 3> hoppings(const StrainConfig& cfg,
                               const std::array<double, 3>& lengths);

LatticeGeometry make_geometry(const StrainConfig& cfg);

/// Undeformed lattice with the same a0 and t0.
LatticeGeometry pristine_geometry(double a0 = 1.0, double t0 = 1.0);

/// Pristine K point (4 pi / (3 sqrt(3) a0), 0).
Vec2 pristine_k_point(double a0 = 1.0);

/// Complex structure factor sum_j t_j exp(-i k . delta_j).
std::complex<double> structure_factor(const Vec2& k, const LatticeGeometry& geom);

/// s * |sum_j t_j exp(-i k . delta_j)|, s = +1 conduction, -1 valence.
double band_energy(const Vec2& k, const LatticeGeometry& geom, int s = 1);

/// Throws GapOpenedError when |t2| > 2|t1|.
void require_gapless(const LatticeGeometry& geom);

/// Root of the structure factor on the branch continuously connected to the
/// pristine K point: homotopy from the pristine lattice with Newton polish.
Vec2 dirac_point(const LatticeGeometry& geom);

ConeParameters cone_parameters(const LatticeGeometry& geom, const Vec2& dirac);

/// Full pipeline: config -> geometry -> Dirac point -> cone parameters.
ConeParameters cone_parameters(const StrainConfig& cfg);

}  // namespace strainwig
