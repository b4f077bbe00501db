#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "strainwig/landau_states.hpp"

namespace strainwig {

using Matrix2c = Eigen::Matrix2cd;

/// (x, px) together with the dimensionless coordinates of a field frame.
struct PhaseSpacePoint {
  double x = 0.0;
  double px = 0.0;
  double xi = 0.0;
  double sp = 0.0;
  cplx chi{0.0, 0.0};  // sqrt(2) (xi + i sp)

  static PhaseSpacePoint physical(double x, double px, const FieldFrame& frame);
  static PhaseSpacePoint scaled(double xi, double sp, const FieldFrame& frame);
};

/// Uniform rectangular grid over (x, px). Node (i, j) sits at
/// (x0 + i dx, px0 + j dpx).
struct GridSpec {
  int nx = 0;
  int npx = 0;
  double x0 = 0.0;
  double dx = 0.0;
  double px0 = 0.0;
  double dpx = 0.0;

  double x(int i) const { return x0 + i * dx; }
  double px(int j) const { return px0 + j * dpx; }
  std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(npx); }
  /// Throws ConfigError for fewer than 2 nodes per axis or non-positive spacing.
  void validate() const;

  static GridSpec uniform(double x_min, double x_max, int nx, double px_min, double px_max,
                          int npx);
  /// Square window [xi_c - h, xi_c + h] x [sp_c - h, sp_c + h] in scaled
  /// coordinates, mapped back to (x, px).
  static GridSpec scaled_window(const FieldFrame& frame, double xi_c, double sp_c,
                                double half_width, int n);
};

inline constexpr int kDefaultGridN = 201;

struct FieldMetadata {
  std::string state;
  double t_prime = 0.0;
  FieldFrame frame;
  int order = 0;
  /// The y-momentum factor is symbolic and never sampled.
  std::string py_factor = "delta(p_y - k)";
};

/// 2x2 complex-matrix samples, x-major (index i * npx + j).
struct WignerField {
  GridSpec grid;
  FieldMetadata meta;
  std::vector<cplx> w11, w12, w21, w22;

  WignerField() = default;
  explicit WignerField(const GridSpec& g);

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(grid.npx) +
           static_cast<std::size_t>(j);
  }
  Matrix2c at(int i, int j) const;
  void set(int i, int j, const Matrix2c& m);
  double trace(int i, int j) const { return (w11[index(i, j)] + w22[index(i, j)]).real(); }
};

struct FieldStats {
  double min_trace = 0.0;
  double max_trace = 0.0;
  int argmax_i = 0;
  int argmax_j = 0;
  double argmax_x = 0.0;
  double argmax_px = 0.0;
  double trace_integral = 0.0;  // sum Tr W dx dpx
  double max_hermiticity_error = 0.0;
  double max_diag_imag = 0.0;
};

}  // namespace strainwig
