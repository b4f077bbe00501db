#include "strainwig/phase_space.hpp"

#include <cmath>
#include <numbers>

#include "strainwig/errors.hpp"

namespace strainwig {

PhaseSpacePoint PhaseSpacePoint::physical(double x, double px, const FieldFrame& frame) {
  PhaseSpacePoint p;
  p.x = x;
  p.px = px;
  p.xi = frame.xi_of_x(x);
  p.sp = frame.sp_of_px(px);
  p.chi = std::numbers::sqrt2 * cplx{p.xi, p.sp};
  return p;
}

PhaseSpacePoint PhaseSpacePoint::scaled(double xi, double sp, const FieldFrame& frame) {
  PhaseSpacePoint p;
  p.xi = xi;
  p.sp = sp;
  p.x = frame.x_of_xi(xi);
  p.px = frame.px_of_sp(sp);
  p.chi = std::numbers::sqrt2 * cplx{xi, sp};
  return p;
}

void GridSpec::validate() const {
  if (nx < 2 || npx < 2) throw ConfigError("grid needs at least 2 nodes per axis");
  if (!(dx > 0.0) || !(dpx > 0.0) || !std::isfinite(dx) || !std::isfinite(dpx))
    throw ConfigError("grid spacing must be positive");
}

GridSpec GridSpec::uniform(double x_min, double x_max, int nx, double px_min, double px_max,
                           int npx) {
  if (nx < 2 || npx < 2) throw ConfigError("grid needs at least 2 nodes per axis");
  GridSpec g;
  g.nx = nx;
  g.npx = npx;
  g.x0 = x_min;
  g.px0 = px_min;
  g.dx = (x_max - x_min) / (nx - 1);
  g.dpx = (px_max - px_min) / (npx - 1);
  g.validate();
  return g;
}

GridSpec GridSpec::scaled_window(const FieldFrame& frame, double xi_c, double sp_c,
                                 double half_width, int n) {
  return uniform(frame.x_of_xi(xi_c - half_width), frame.x_of_xi(xi_c + half_width), n,
                 frame.px_of_sp(sp_c - half_width), frame.px_of_sp(sp_c + half_width), n);
}

WignerField::WignerField(const GridSpec& g) : grid(g) {
  grid.validate();
  const std::size_t n = grid.size();
  w11.assign(n, cplx{});
  w12.assign(n, cplx{});
  w21.assign(n, cplx{});
  w22.assign(n, cplx{});
}

Matrix2c WignerField::at(int i, int j) const {
  const std::size_t k = index(i, j);
  Matrix2c m;
  m << w11[k], w12[k], w21[k], w22[k];
  return m;
}

void WignerField::set(int i, int j, const Matrix2c& m) {
  const std::size_t k = index(i, j);
  w11[k] = m(0, 0);
  w12[k] = m(0, 1);
  w21[k] = m(1, 0);
  w22[k] = m(1, 1);
}

}  // namespace strainwig
