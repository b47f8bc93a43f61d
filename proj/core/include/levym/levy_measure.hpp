#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "levym/quadrature.hpp"

namespace levym {

enum class NuRegion { inner, outer, full };  // (0,1), [1,inf), (0,inf) in |y|

/// Point mass at `point` (in R^d) with weight `mass`.
struct Atom {
  std::vector<double> point;
  double mass = 0.0;
  double radius() const;
};

/// Radial part of a Levy measure, stored as the pushforward intensity under
/// y -> |y|: for every radial h,
///
///     integral of h(|y|) nu(dy)  =  int_0^inf h(r) intensity(r) dr.
///
/// In d >= 2 the surface factor is already folded into `intensity`.
/// `sing_exponent` declares intensity(r) ~ r^s as r -> 0 inside the support.
struct RadialComponent {
  std::function<double(double)> intensity;
  double support_lo = 0.0;
  double support_hi = kInf;
  double sing_exponent = 0.0;
  std::optional<std::function<double(double)>> tail_mass_closed;  // r -> nu(|y| >= r)
};

/// How the measure sits relative to the origin; drives the small-jump mean
/// used by the compensated drift.
enum class MeasureSymmetry {
  symmetric,           // small-jump mean is zero (radial in d>=2, even in d=1)
  one_sided_positive,  // d=1 measure carried by (0,inf)
};

/// Immutable jump-intensity measure on R^d \ {0} with
/// int (1 and |y|^2) nu(dy) < inf, verified by quadrature at construction.
class LevyMeasure {
 public:
  /// Zero measure in dimension d.
  explicit LevyMeasure(int d = 1);
  LevyMeasure(int d, MeasureSymmetry sym, std::vector<RadialComponent> radial,
              std::vector<Atom> atoms, std::string name = {});

  static LevyMeasure zero(int d = 1) { return LevyMeasure(d); }

  int dim() const { return d_; }
  bool is_zero() const { return radial_.empty() && atoms_.empty(); }
  MeasureSymmetry symmetry() const { return sym_; }
  const std::string& name() const { return name_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<RadialComponent>& radial_components() const { return radial_; }

  /// Sum of two measures on the same dimension (components concatenate).
  LevyMeasure operator+(const LevyMeasure& other) const;

  /// integral of h(|y|) nu(dy) over {r_lo <= |y| < r_hi}; `h_sing` declares
  /// h(r) ~ r^a near 0. Divergence is reported as a value, never thrown.
  QuadratureResult radial_integral(const std::function<double(double)>& h, double h_sing,
                                   double r_lo, double r_hi, double scale = 1.0,
                                   double rel_tol = 1e-10) const;

  /// nu(|y| >= r).
  QuadratureResult tail_mass(double r) const;

  /// integral of |y|^theta nu(dy) over the region.
  QuadratureResult frac_moment(double theta, NuRegion region = NuRegion::full) const;

  /// integral of e^{lambda |y|^kappa} nu(dy) over the region.
  QuadratureResult exp_moment(double lambda, double kappa,
                              NuRegion region = NuRegion::outer) const;

  /// M_{kappa,lambda} = integral of (e^{lambda |y|^kappa} - 1) nu(dy) over (0,inf).
  QuadratureResult exp_moment_minus_one(double lambda, double kappa) const;

  /// integral over 0<|y|<1 of y nu(dy); empty when int_{|y|<1} |y| nu(dy) = inf.
  std::optional<std::vector<double>> small_jump_mean() const;

 private:
  void validate() const;

  int d_ = 1;
  MeasureSymmetry sym_ = MeasureSymmetry::symmetric;
  std::vector<RadialComponent> radial_;
  std::vector<Atom> atoms_;
  std::string name_;
};

}  // namespace levym
