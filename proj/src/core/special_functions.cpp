#include "strainwig/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "strainwig/fault_injection.hpp"

namespace strainwig {

void hermite_functions(int nmax, double xi, double* out) {
  if (nmax < 0) return;
  const double h0 = std::exp(-0.5 * xi * xi) / std::sqrt(std::sqrt(std::numbers::pi));
  out[0] = h0;
  if (nmax == 0) return;
  out[1] = std::numbers::sqrt2 * xi * h0;
  for (int n = 1; n < nmax; ++n) {
    const double np1 = n + 1.0;
    out[n + 1] = xi * std::sqrt(2.0 / np1) * out[n] - std::sqrt(n / np1) * out[n - 1];
  }
}

double hermite_function(int n, double xi) {
  if (n < 0) return 0.0;
  double prev = 0.0;
  double cur = std::exp(-0.5 * xi * xi) / std::sqrt(std::sqrt(std::numbers::pi));
  for (int k = 0; k < n; ++k) {
    const double kp1 = k + 1.0;
    const double next = xi * std::sqrt(2.0 / kp1) * cur - std::sqrt(k / kp1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double normalized_laguerre_start(int d, double x) {
  double l = std::exp(-0.5 * x);
  for (int k = 0; k < d; ++k) l *= std::sqrt(x / (k + 1.0));
  return l;
}

void normalized_laguerre_run(int jmax, int d, double x, double l0, double* out) {
  if (jmax < 0) return;
  const double bias = fault_factor(Fault::LaguerreRecurrence);
  out[0] = l0;
  if (jmax == 0) return;
  out[1] = bias * (1.0 + d - x) / std::sqrt(1.0 + d) * l0;
  for (int j = 1; j < jmax; ++j) {
    const double jp = j + 1.0;
    const double denom = std::sqrt(jp * (jp + d));
    out[j + 1] = bias * (2.0 * j + 1.0 + d - x) / denom * out[j] -
                 std::sqrt(j * (j + static_cast<double>(d))) / denom * out[j - 1];
  }
}

double normalized_laguerre(int j, int d, double x) {
  if (j < 0 || d < 0) return 0.0;
  std::vector<double> l(static_cast<std::size_t>(j) + 1);
  normalized_laguerre_run(j, d, x, normalized_laguerre_start(d, x), l.data());
  return l.back();
}

double bessel_j0_imag(double r) {
  const double r2 = r * r;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 10000; ++n) {
    term *= r2 / (static_cast<double>(n) * n);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

}  // namespace strainwig
