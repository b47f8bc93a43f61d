#pragma once

namespace levym {

/// Surface area of the unit sphere in R^d: s_d = 2 pi^{d/2} / Gamma(d/2).
double sphere_surface(int d);

/// Constants of the Riesz-type kernel identities used for fractional moments.
///
///   |x|^kappa   = c_kd     * integral of (1 - cos(x.xi)) |xi|^{-kappa-d} dxi
///   e^{-u|x|}   = c_d      * Fourier kernel of the Poisson-type identity
///   c_prime_kd    relates |xi|^{-d+kappa} e^{-u|xi|} to the |x|^{-kappa} kernel
struct RieszConstants {
  double c_kd = 0.0;        // valid for 0 < kappa < 2
  double c_prime_kd = 0.0;  // valid for 0 < kappa < d
  double c_d = 0.0;

  static RieszConstants make(double kappa, int d);
};

double riesz_c(double kappa, int d);        // c_kd
double riesz_c_prime(double kappa, int d);  // c_prime_kd
double cauchy_kernel_c(int d);              // c_d

}  // namespace levym
