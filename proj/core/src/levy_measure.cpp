#include "levym/levy_measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levym {

double Atom::radius() const {
  double s = 0.0;
  for (double x : point) s += x * x;
  return std::sqrt(s);
}

LevyMeasure::LevyMeasure(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("LevyMeasure: dimension must be >= 1");
}

LevyMeasure::LevyMeasure(int d, MeasureSymmetry sym, std::vector<RadialComponent> radial,
                         std::vector<Atom> atoms, std::string name)
    : d_(d), sym_(sym), radial_(std::move(radial)), atoms_(std::move(atoms)),
      name_(std::move(name)) {
  if (d < 1) throw std::invalid_argument("LevyMeasure: dimension must be >= 1");
  validate();
}

void LevyMeasure::validate() const {
  for (const Atom& a : atoms_) {
    if (static_cast<int>(a.point.size()) != d_)
      throw std::invalid_argument("LevyMeasure: atom dimension mismatch");
    if (a.mass < 0.0) throw std::invalid_argument("LevyMeasure: negative atom mass");
    if (a.radius() == 0.0) throw std::invalid_argument("LevyMeasure: atom at the origin");
  }
  for (const RadialComponent& c : radial_) {
    if (!(c.support_hi > c.support_lo) || c.support_lo < 0.0)
      throw std::invalid_argument("LevyMeasure: bad radial support");
    // spot-check nonnegativity on a log grid inside the support
    const double lo = std::max(c.support_lo, 1e-12);
    const double hi = std::min(c.support_hi, 1e12);
    for (int i = 0; i <= 32; ++i) {
      const double r = lo * std::pow(hi / lo, i / 32.0);
      if (c.intensity(r) < 0.0)
        throw std::invalid_argument("LevyMeasure: negative intensity at r=" +
                                    std::to_string(r));
    }
    if (c.sing_exponent <= -3.0)
      throw std::invalid_argument("LevyMeasure: intensity exponent <= -3 at 0");
  }

  // int (1 and |y|^2) nu(dy) < inf: quadratic part near 0, mass at infinity.
  auto sq = [](double r) { return r * r; };
  QuadratureResult inner = radial_integral(sq, 2.0, 0.0, 1.0);
  QuadratureResult outer = tail_mass(1.0);
  if (!inner.ok() || !outer.ok() || !std::isfinite(inner.value) ||
      !std::isfinite(outer.value)) {
    throw std::invalid_argument("LevyMeasure: int (1 and |y|^2) nu(dy) diverges: " +
                                (inner.ok() ? outer.certificate : inner.certificate));
  }
}

LevyMeasure LevyMeasure::operator+(const LevyMeasure& other) const {
  if (other.d_ != d_) throw std::invalid_argument("LevyMeasure: dimension mismatch in sum");
  MeasureSymmetry sym =
      (sym_ == other.sym_) ? sym_ : MeasureSymmetry::one_sided_positive;
  if (sym_ != other.sym_ && d_ != 1)
    throw std::invalid_argument("LevyMeasure: mixed symmetry only supported in d=1");
  std::vector<RadialComponent> radial = radial_;
  radial.insert(radial.end(), other.radial_.begin(), other.radial_.end());
  std::vector<Atom> atoms = atoms_;
  atoms.insert(atoms.end(), other.atoms_.begin(), other.atoms_.end());
  std::string name = name_.empty() ? other.name_ : (other.name_.empty() ? name_ : name_ + "+" + other.name_);
  return LevyMeasure(d_, sym, std::move(radial), std::move(atoms), std::move(name));
}

QuadratureResult LevyMeasure::radial_integral(const std::function<double(double)>& h,
                                              double h_sing, double r_lo, double r_hi,
                                              double scale, double rel_tol) const {
  QuadratureResult total;
  for (const Atom& a : atoms_) {
    const double r = a.radius();
    if (r >= r_lo && r < r_hi) total.value += a.mass * h(r);
  }
  for (const RadialComponent& c : radial_) {
    const double lo = std::max(r_lo, c.support_lo);
    const double hi = std::min(r_hi, c.support_hi);
    if (hi <= lo) continue;
    SemiInfOptions opts;
    opts.rel_tol = rel_tol;
    opts.support_lo = lo;
    opts.support_hi = hi;
    opts.scale = std::clamp(scale, lo > 0.0 ? lo : scale, hi);
    opts.check_divergence = true;
    // no mass => no contribution, even where h alone overflows
    auto f = [&](double r) {
      const double m = c.intensity(r);
      if (m == 0.0) return 0.0;
      return h(r) * m;
    };
    QuadratureResult part =
        integrate_semiinf(f, h_sing + c.sing_exponent, opts);
    if (!part.ok()) {
      part.value = kInf;
      return part;  // first divergent/undecided component decides
    }
    total.value += part.value;
    total.abs_error += part.abs_error;
    total.subdivisions += part.subdivisions;
  }
  return total;
}

QuadratureResult LevyMeasure::tail_mass(double r) const {
  if (!(r > 0.0)) throw std::invalid_argument("tail_mass: r must be > 0");
  QuadratureResult total;
  for (const Atom& a : atoms_) {
    if (a.radius() >= r) total.value += a.mass;
  }
  for (const RadialComponent& c : radial_) {
    if (c.tail_mass_closed) {
      const double lo_clip = std::max(r, c.support_lo);
      total.value += (*c.tail_mass_closed)(lo_clip);
      continue;
    }
    const double lo = std::max(r, c.support_lo);
    if (c.support_hi <= lo) continue;
    SemiInfOptions opts;
    opts.support_lo = lo;
    opts.support_hi = c.support_hi;
    opts.scale = lo;
    opts.check_divergence = true;
    QuadratureResult part = integrate_semiinf(c.intensity, 0.0, opts);
    if (!part.ok()) {
      part.value = kInf;
      part.certificate = "tail mass diverges (invalid Levy measure?): " + part.certificate;
      return part;
    }
    total.value += part.value;
    total.abs_error += part.abs_error;
    total.subdivisions += part.subdivisions;
  }
  return total;
}

namespace {
void region_limits(NuRegion region, double* lo, double* hi) {
  switch (region) {
    case NuRegion::inner: *lo = 0.0; *hi = 1.0; break;
    case NuRegion::outer: *lo = 1.0; *hi = kInf; break;
    case NuRegion::full:  *lo = 0.0; *hi = kInf; break;
  }
}
}  // namespace

QuadratureResult LevyMeasure::frac_moment(double theta, NuRegion region) const {
  double lo, hi;
  region_limits(region, &lo, &hi);
  auto h = [theta](double r) { return std::pow(r, theta); };
  return radial_integral(h, theta, lo, hi);
}

QuadratureResult LevyMeasure::exp_moment(double lambda, double kappa,
                                         NuRegion region) const {
  if (!(lambda > 0.0) || !(kappa > 0.0) || kappa > 1.0)
    throw std::invalid_argument("exp_moment: need lambda > 0 and kappa in (0,1]");
  double lo, hi;
  region_limits(region, &lo, &hi);
  auto h = [=](double r) { return std::exp(lambda * std::pow(r, kappa)); };
  return radial_integral(h, 0.0, lo, hi);
}

QuadratureResult LevyMeasure::exp_moment_minus_one(double lambda, double kappa) const {
  if (!(lambda > 0.0) || !(kappa > 0.0) || kappa > 1.0)
    throw std::invalid_argument("exp_moment_minus_one: need lambda > 0, kappa in (0,1]");
  auto h = [=](double r) { return std::expm1(lambda * std::pow(r, kappa)); };
  // h ~ lambda r^kappa near 0
  return radial_integral(h, kappa, 0.0, kInf);
}

std::optional<std::vector<double>> LevyMeasure::small_jump_mean() const {
  // existence requires int_{0<|y|<1} |y| nu(dy) < inf (bounded variation)
  QuadratureResult lin = radial_integral([](double r) { return r; }, 1.0, 0.0, 1.0);
  if (!lin.ok() || !std::isfinite(lin.value)) return std::nullopt;

  std::vector<double> mean(d_, 0.0);
  for (const Atom& a : atoms_) {
    if (a.radius() < 1.0) {
      for (int i = 0; i < d_; ++i) mean[i] += a.mass * a.point[i];
    }
  }
  if (sym_ == MeasureSymmetry::one_sided_positive) {
    mean[0] += lin.value;  // radial parts cancel in the symmetric case
  }
  return mean;
}

}  // namespace levym
