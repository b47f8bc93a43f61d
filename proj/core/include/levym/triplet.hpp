#pragma once

#include <optional>
#include <vector>

#include "levym/bernstein.hpp"
#include "levym/levy_measure.hpp"

namespace levym {

/// Dense symmetric d x d matrix (row-major), small dimensions only.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int d);                       // zero matrix
  SymMatrix(int d, std::vector<double> entries);   // validated symmetric

  static SymMatrix identity(int d, double scale = 1.0);

  int dim() const { return d_; }
  bool is_zero() const;
  double operator()(int i, int j) const { return a_[i * d_ + j]; }
  double min_eigenvalue() const;  // cyclic Jacobi

 private:
  int d_ = 0;
  std::vector<double> a_;
};

/// (ell, Q, nu): drift vector, Gaussian covariance, jump measure.
struct LevyTriplet {
  std::vector<double> ell;
  SymMatrix Q;
  LevyMeasure nu;

  LevyTriplet(std::vector<double> drift, SymMatrix gaussian, LevyMeasure measure);

  int dim() const { return static_cast<int>(ell.size()); }
  bool gaussian_zero() const { return Q.is_zero(); }
  double drift_norm() const;

  /// ell_hat = ell - int_{0<|y|<1} y nu(dy); empty when the small jumps are
  /// not absolutely integrable (process is not of bounded variation).
  std::optional<std::vector<double>> compensated_drift() const;
  std::optional<double> compensated_drift_norm() const;
};

/// A subordinator with Laplace exponent phi, viewed as a Levy process on R.
/// The drift slot carries b plus the small-jump mean, so the compensated
/// drift recovers b.
LevyTriplet subordinator_triplet(const BernsteinFunction& phi);

}  // namespace levym
