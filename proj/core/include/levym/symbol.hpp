#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>

#include "levym/bernstein.hpp"
#include "levym/triplet.hpp"

namespace levym {

/// Characteristic exponent psi: E e^{i xi . X_t} = e^{-t psi(xi)}.
///
/// Stored through its restriction to the positive ray: `line(r)` = psi(r e1)
/// for r > 0. Radial symbols extend by psi(xi) = line(|xi|); on R^1 the
/// negative axis follows from psi(-xi) = conj(psi(xi)).
class CharacteristicExponent {
 public:
  CharacteristicExponent() = default;
  CharacteristicExponent(int d, bool radial, std::function<std::complex<double>(double)> line,
                         std::string source);

  int dim() const { return d_; }
  bool radial() const { return radial_; }
  const std::string& source() const { return source_; }

  /// psi on the positive ray (r > 0); psi(0) = 0.
  std::complex<double> operator()(double r) const;
  /// psi at a full argument vector (radial symbols and d=1 only).
  std::complex<double> evaluate(std::span<const double> xi) const;

 private:
  int d_ = 1;
  bool radial_ = true;
  std::function<std::complex<double>(double)> line_;
  std::string source_ = "zero";
};

/// psi(xi) = |xi|^2 / 2 (generator Laplacian/2; X_t has covariance t I).
CharacteristicExponent brownian_symbol(int d, double scale = 1.0);

/// psi(xi) = |xi|^alpha, the rotation-invariant alpha-stable normalisation.
CharacteristicExponent symmetric_stable_symbol(double alpha, int d);

CharacteristicExponent zero_symbol(int d = 1);

/// psi(xi) = phi(-i xi) on R; closed-form principal branch when available,
/// otherwise quadrature of b(-i xi) + integral of (1 - e^{i xi x}) nu(dx).
CharacteristicExponent symbol_from_bernstein(const BernsteinFunction& phi);

/// Levy-Khintchine quadrature for a triplet: supported on R (one-sided or
/// symmetric measures) and for radial measures in d >= 2.
CharacteristicExponent symbol_from_triplet(const LevyTriplet& triplet);

}  // namespace levym
