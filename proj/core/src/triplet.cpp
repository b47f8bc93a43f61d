#include "levym/triplet.hpp"

#include <cmath>
#include <stdexcept>

namespace levym {

SymMatrix::SymMatrix(int d) : d_(d), a_(d * d, 0.0) {}

SymMatrix::SymMatrix(int d, std::vector<double> entries) : d_(d), a_(std::move(entries)) {
  if (static_cast<int>(a_.size()) != d * d)
    throw std::invalid_argument("SymMatrix: size mismatch");
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (std::abs(a_[i * d + j] - a_[j * d + i]) > 1e-12 * (1.0 + std::abs(a_[i * d + j])))
        throw std::invalid_argument("SymMatrix: not symmetric");
  if (min_eigenvalue() < -1e-10)
    throw std::invalid_argument("SymMatrix: negative eigenvalue (not PSD)");
}

SymMatrix SymMatrix::identity(int d, double scale) {
  SymMatrix m(d);
  for (int i = 0; i < d; ++i) m.a_[i * d + i] = scale;
  return m;
}

bool SymMatrix::is_zero() const {
  for (double x : a_)
    if (x != 0.0) return false;
  return true;
}

double SymMatrix::min_eigenvalue() const {
  if (d_ == 0) return 0.0;
  std::vector<double> m = a_;
  const int d = d_;
  // cyclic Jacobi sweeps; plenty for the small matrices used here
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) off += m[p * d + q] * m[p * d + q];
    if (off < 1e-24) break;
    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const double apq = m[p * d + q];
        if (std::abs(apq) < 1e-300) continue;
        const double app = m[p * d + p], aqq = m[q * d + q];
        const double theta = 0.5 * std::atan2(2.0 * apq, aqq - app);
        const double c = std::cos(theta), s = std::sin(theta);
        for (int k = 0; k < d; ++k) {
          const double mkp = m[k * d + p], mkq = m[k * d + q];
          m[k * d + p] = c * mkp - s * mkq;
          m[k * d + q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < d; ++k) {
          const double mpk = m[p * d + k], mqk = m[q * d + k];
          m[p * d + k] = c * mpk - s * mqk;
          m[q * d + k] = s * mpk + c * mqk;
        }
      }
    }
  }
  double lo = m[0];
  for (int i = 0; i < d; ++i) lo = std::min(lo, m[i * d + i]);
  return lo;
}

LevyTriplet::LevyTriplet(std::vector<double> drift, SymMatrix gaussian, LevyMeasure measure)
    : ell(std::move(drift)), Q(std::move(gaussian)), nu(std::move(measure)) {
  const int d = static_cast<int>(ell.size());
  if (d < 1) throw std::invalid_argument("LevyTriplet: empty drift vector");
  if (Q.dim() != d || nu.dim() != d)
    throw std::invalid_argument("LevyTriplet: dimension mismatch");
}

double LevyTriplet::drift_norm() const {
  double s = 0.0;
  for (double x : ell) s += x * x;
  return std::sqrt(s);
}

std::optional<std::vector<double>> LevyTriplet::compensated_drift() const {
  auto mean = nu.small_jump_mean();
  if (!mean) return std::nullopt;
  std::vector<double> out = ell;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= (*mean)[i];
  return out;
}

std::optional<double> LevyTriplet::compensated_drift_norm() const {
  auto v = compensated_drift();
  if (!v) return std::nullopt;
  double s = 0.0;
  for (double x : *v) s += x * x;
  return std::sqrt(s);
}

LevyTriplet subordinator_triplet(const BernsteinFunction& phi) {
  auto mean = phi.measure().small_jump_mean();
  // subordinator measures integrate (x and 1), so the mean always exists
  double ell = phi.drift() + (mean ? (*mean)[0] : 0.0);
  return LevyTriplet({ell}, SymMatrix(1), phi.measure());
}

}  // namespace levym
