#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "strainwig/errors.hpp"

namespace strainwig::oracle {

/// Samples f(u, v) on a uniform grid, u-major (index i * nv + j).
template <class T>
struct GridFunction {
  int nu = 0;
  int nv = 0;
  double u0 = 0.0;
  double hu = 0.0;
  double v0 = 0.0;
  double hv = 0.0;
  std::vector<T> values;

  double u(int i) const { return u0 + i * hu; }
  double v(int j) const { return v0 + j * hv; }
  T& operator()(int i, int j) { return values[static_cast<std::size_t>(i) * nv + j]; }
  const T& operator()(int i, int j) const { return values[static_cast<std::size_t>(i) * nv + j]; }

  GridFunction like() const {
    GridFunction g = *this;
    g.values.assign(values.size(), T{});
    return g;
  }

  template <class F>
  static GridFunction sample(int nu, double u_min, double u_max, int nv, double v_min,
                             double v_max, F&& f) {
    GridFunction g;
    g.nu = nu;
    g.nv = nv;
    g.u0 = u_min;
    g.v0 = v_min;
    g.hu = (u_max - u_min) / (nu - 1);
    g.hv = (v_max - v_min) / (nv - 1);
    g.values.resize(static_cast<std::size_t>(nu) * nv);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nu; ++i)
      for (int j = 0; j < nv; ++j) g(i, j) = f(g.u(i), g.v(j));
    return g;
  }
};

enum class Derivative { First, Second };
enum class Axis { U, V };

/// Cells at each edge evaluated with one-sided stencils.
inline constexpr int kStencilHalfWidth = 2;

namespace detail {

template <class T>
T apply_1d(const T* f, std::ptrdiff_t stride, int n, int i, double h, Derivative d) {
  auto at = [&](int k) { return f[static_cast<std::ptrdiff_t>(k) * stride]; };
  if (d == Derivative::First) {
    const double s = 1.0 / (12.0 * h);
    if (i >= 2 && i < n - 2) return s * (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2));
    if (i == 0) return s * (-25.0 * at(0) + 48.0 * at(1) - 36.0 * at(2) + 16.0 * at(3) - 3.0 * at(4));
    if (i == 1) return s * (-3.0 * at(0) - 10.0 * at(1) + 18.0 * at(2) - 6.0 * at(3) + at(4));
    if (i == n - 1)
      return -s * (-25.0 * at(n - 1) + 48.0 * at(n - 2) - 36.0 * at(n - 3) + 16.0 * at(n - 4) -
                   3.0 * at(n - 5));
    return -s * (-3.0 * at(n - 1) - 10.0 * at(n - 2) + 18.0 * at(n - 3) - 6.0 * at(n - 4) +
                 at(n - 5));
  }
  const double s = 1.0 / (12.0 * h * h);
  if (i >= 2 && i < n - 2)
    return s * (-at(i + 2) + 16.0 * at(i + 1) - 30.0 * at(i) + 16.0 * at(i - 1) - at(i - 2));
  if (i == 0) return s * (35.0 * at(0) - 104.0 * at(1) + 114.0 * at(2) - 56.0 * at(3) + 11.0 * at(4));
  if (i == 1) return s * (11.0 * at(0) - 20.0 * at(1) + 6.0 * at(2) + 4.0 * at(3) - at(4));
  if (i == n - 1)
    return s * (35.0 * at(n - 1) - 104.0 * at(n - 2) + 114.0 * at(n - 3) - 56.0 * at(n - 4) +
                11.0 * at(n - 5));
  return s * (11.0 * at(n - 1) - 20.0 * at(n - 2) + 6.0 * at(n - 3) + 4.0 * at(n - 4) - at(n - 5));
}

template <class T>
void check(const GridFunction<T>& f, Axis axis) {
  const int n = axis == Axis::U ? f.nu : f.nv;
  if (n < 5)
    throw GridTooCoarse("finite-difference stencil needs at least 5 samples, got " +
                        std::to_string(n));
}

}  // namespace detail

/// Fourth-order derivative along one axis; the kStencilHalfWidth edge cells
/// use one-sided formulas and belong to the guard region.
template <class T>
GridFunction<T> fd_apply(Derivative d, const GridFunction<T>& f, Axis axis) {
  detail::check(f, axis);
  GridFunction<T> out = f.like();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < f.nu; ++i) {
    for (int j = 0; j < f.nv; ++j) {
      if (axis == Axis::U)
        out(i, j) = detail::apply_1d(&f(0, j), f.nv, f.nu, i, f.hu, d);
      else
        out(i, j) = detail::apply_1d(&f(i, 0), 1, f.nv, j, f.hv, d);
    }
  }
  return out;
}

template <class T>
GridFunction<T> fd_apply_serial(Derivative d, const GridFunction<T>& f, Axis axis) {
  detail::check(f, axis);
  GridFunction<T> out = f.like();
  for (int i = 0; i < f.nu; ++i) {
    for (int j = 0; j < f.nv; ++j) {
      if (axis == Axis::U)
        out(i, j) = detail::apply_1d(&f(0, j), f.nv, f.nu, i, f.hu, d);
      else
        out(i, j) = detail::apply_1d(&f(i, 0), 1, f.nv, j, f.hv, d);
    }
  }
  return out;
}

/// L2 norm over the interior, skipping `guard` cells on every edge.
template <class T>
double interior_norm(const GridFunction<T>& f, int guard) {
  double sum = 0.0;
  for (int i = guard; i < f.nu - guard; ++i)
    for (int j = guard; j < f.nv - guard; ++j) sum += std::norm(f(i, j));
  return std::sqrt(sum * f.hu * f.hv);
}

/// Max abs over the interior.
template <class T>
double interior_max(const GridFunction<T>& f, int guard) {
  double m = 0.0;
  for (int i = guard; i < f.nu - guard; ++i)
    for (int j = guard; j < f.nv - guard; ++j) m = std::max(m, std::abs(f(i, j)));
  return m;
}

}  // namespace strainwig::oracle
