#include "levym/special.hpp"

#include <cmath>
#include <stdexcept>

namespace levym {

double sphere_surface(int d) {
  if (d < 1) throw std::invalid_argument("sphere_surface: d must be >= 1");
  return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d);
}

double riesz_c(double kappa, int d) {
  if (!(kappa > 0.0 && kappa < 2.0)) {
    throw std::invalid_argument("riesz_c: kappa must lie in (0,2)");
  }
  return kappa * std::pow(2.0, kappa - 1.0) * std::tgamma(0.5 * (kappa + d)) /
         (std::pow(M_PI, 0.5 * d) * std::tgamma(1.0 - 0.5 * kappa));
}

double riesz_c_prime(double kappa, int d) {
  if (!(kappa > 0.0 && kappa < d)) {
    throw std::invalid_argument("riesz_c_prime: kappa must lie in (0,d)");
  }
  return std::pow(2.0, kappa) * std::pow(M_PI, 0.5 * d) * std::tgamma(0.5 * kappa) /
         std::tgamma(0.5 * (d - kappa));
}

double cauchy_kernel_c(int d) {
  return std::pow(M_PI, -0.5 * (d + 1)) * std::tgamma(0.5 * (d + 1));
}

RieszConstants RieszConstants::make(double kappa, int d) {
  RieszConstants rc;
  rc.c_kd = (kappa > 0.0 && kappa < 2.0) ? riesz_c(kappa, d) : 0.0;
  rc.c_prime_kd = (kappa > 0.0 && kappa < d) ? riesz_c_prime(kappa, d) : 0.0;
  rc.c_d = cauchy_kernel_c(d);
  return rc;
}

}  // namespace levym
