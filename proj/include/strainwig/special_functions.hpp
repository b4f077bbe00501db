#pragma once

namespace strainwig {

/// Orthonormal Hermite functions h_0..h_nmax at xi,
/// h_n(xi) = H_n(xi) e^{-xi^2/2} / sqrt(2^n n! sqrt(pi)), written to out[0..nmax].
void hermite_functions(int nmax, double xi, double* out);
double hermite_function(int n, double xi);

/// l_j^d(x) = sqrt(j!/(j+d)!) x^{d/2} e^{-x/2} L_j^d(x).
/// Starting value l_0^d(x) = x^{d/2} e^{-x/2} / sqrt(d!).
double normalized_laguerre_start(int d, double x);

/// Fills out[0..jmax] with l_j^d(x) from the three-term recurrence, seeded
/// with l0 = normalized_laguerre_start(d, x).
void normalized_laguerre_run(int jmax, int d, double x, double l0, double* out);

double normalized_laguerre(int j, int d, double x);

/// J_0(2 i r) = I_0(2 r) = sum_n r^{2n} / (n!)^2 for real r >= 0.
double bessel_j0_imag(double r);

}  // namespace strainwig
