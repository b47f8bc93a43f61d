#include "levym/bernstein.hpp"

#include <cmath>
#include <stdexcept>

namespace levym {

namespace {

std::complex<double> term_value(const ClosedFormTerm& term, std::complex<double> z) {
  if (const auto* s = std::get_if<StableTerm>(&term)) {
    return s->c * std::pow(z, s->alpha);  // principal branch, Re z >= 0
  }
  if (const auto* g = std::get_if<GammaTerm>(&term)) {
    return g->alpha * std::log(1.0 + z / g->beta);
  }
  const auto& p = std::get<PoissonTerm>(term);
  std::complex<double> laplace = 0.0;
  for (const auto& [y, w] : p.jumps) laplace += w * std::exp(-z * y);
  return p.eta * (1.0 - laplace);
}

double term_derivative(const ClosedFormTerm& term, double u) {
  if (const auto* s = std::get_if<StableTerm>(&term)) {
    return s->c * s->alpha * std::pow(u, s->alpha - 1.0);
  }
  if (const auto* g = std::get_if<GammaTerm>(&term)) {
    return g->alpha / (g->beta + u);
  }
  const auto& p = std::get<PoissonTerm>(term);
  double dl = 0.0;
  for (const auto& [y, w] : p.jumps) dl += w * y * std::exp(-u * y);
  return p.eta * dl;
}

}  // namespace

BernsteinFunction::BernsteinFunction() : nu_(1) {}

BernsteinFunction::BernsteinFunction(double drift, LevyMeasure nu,
                                     std::vector<ClosedFormTerm> closed, std::string name)
    : b_(drift), nu_(std::move(nu)), terms_(std::move(closed)), name_(std::move(name)) {
  if (b_ < 0.0) throw std::invalid_argument("BernsteinFunction: drift must be >= 0");
  if (nu_.dim() != 1) throw std::invalid_argument("BernsteinFunction: measure must be 1-d");
  if (nu_.symmetry() != MeasureSymmetry::one_sided_positive && !nu_.is_zero())
    throw std::invalid_argument("BernsteinFunction: measure must live on (0,inf)");
}

double BernsteinFunction::operator()(double u) const {
  if (u <= 0.0) return 0.0;
  if (!terms_.empty()) {
    double v = b_ * u;
    for (const auto& t : terms_) v += term_value(t, u).real();
    return v;
  }
  return value_quadrature(u);
}

double BernsteinFunction::value_quadrature(double u) const {
  if (u <= 0.0) return 0.0;
  double v = b_ * u;
  if (!nu_.is_zero()) {
    auto h = [u](double x) { return -std::expm1(-u * x); };  // 1 - e^{-ux} ~ ux
    QuadratureResult q = nu_.radial_integral(h, 1.0, 0.0, kInf, 1.0 / u, 1e-11);
    if (!q.ok()) throw std::runtime_error("BernsteinFunction: quadrature failed: " + q.certificate);
    v += q.value;
  }
  return v;
}

double BernsteinFunction::derivative(double u) const {
  if (u < 0.0) throw std::invalid_argument("BernsteinFunction::derivative: u < 0");
  if (!terms_.empty()) {
    double v = b_;
    for (const auto& t : terms_) v += term_derivative(t, u);
    return v;
  }
  double v = b_;
  if (!nu_.is_zero()) {
    auto h = [u](double x) { return x * std::exp(-u * x); };
    QuadratureResult q = nu_.radial_integral(h, 1.0, 0.0, kInf, u > 0.0 ? 1.0 / u : 1.0);
    if (!q.ok()) return kInf;  // phi'(0+) = b + int x nu(dx) may be infinite
    v += q.value;
  }
  return v;
}

std::complex<double> BernsteinFunction::continuation(double xi) const {
  if (xi == 0.0) return 0.0;
  if (xi < 0.0) return std::conj(continuation(-xi));
  const std::complex<double> z(0.0, -xi);  // -i xi

  if (!terms_.empty()) {
    std::complex<double> v = b_ * z;
    for (const auto& t : terms_) v += term_value(t, z);
    return v;
  }

  // quadrature route: psi(xi) = -i b xi + int (1 - cos(xi x)) nu(dx)
  //                            - i int sin(xi x) nu(dx)
  double re = 0.0, im = -b_ * xi;
  if (!nu_.is_zero()) {
    const double split = 1.0 / xi;
    for (const auto& c : nu_.radial_components()) {
      const double lo = c.support_lo, hi = c.support_hi;
      const double s = std::min(std::max(split, lo), hi);
      // head: both integrands are smooth multiples of the intensity
      if (s > lo) {
        SemiInfOptions opts;
        opts.support_lo = lo;
        opts.support_hi = s;
        opts.scale = s;
        auto fre = [&](double x) {
          const double t = std::sin(0.5 * xi * x);
          return 2.0 * t * t * c.intensity(x);  // 1 - cos
        };
        auto fim = [&](double x) { return std::sin(xi * x) * c.intensity(x); };
        re += integrate_semiinf(fre, 2.0 + c.sing_exponent, opts).value;
        im -= integrate_semiinf(fim, 1.0 + c.sing_exponent, opts).value;
      }
      // tail: nu mass minus oscillatory parts, half-period summation
      if (hi > s) {
        double comp_mass;
        if (c.tail_mass_closed) {
          comp_mass = (*c.tail_mass_closed)(s);
        } else {
          SemiInfOptions mopts;
          mopts.support_lo = s;
          mopts.support_hi = hi;
          mopts.scale = s;
          mopts.check_divergence = true;
          comp_mass = integrate_semiinf(c.intensity, 0.0, mopts).value;
        }
        QuadratureResult osc_cos =
            integrate_oscillatory_tail(c.intensity, xi, /*use_sin=*/false, s, hi);
        QuadratureResult osc_sin =
            integrate_oscillatory_tail(c.intensity, xi, /*use_sin=*/true, s, hi);
        re += comp_mass - osc_cos.value;
        im -= osc_sin.value;
      }
    }
    for (const Atom& a : nu_.atoms()) {
      const double y = a.radius();
      const double t = std::sin(0.5 * xi * y);
      re += a.mass * 2.0 * t * t;
      im -= a.mass * std::sin(xi * y);
    }
  }
  return {re, im};
}

BernsteinFunction BernsteinFunction::operator+(const BernsteinFunction& other) const {
  // a sum keeps closed forms only when both sides have them
  std::vector<ClosedFormTerm> terms;
  const bool closed = (has_closed_form() || nu_.is_zero()) &&
                      (other.has_closed_form() || other.nu_.is_zero()) &&
                      !(terms_.empty() && other.terms_.empty());
  if (closed) {
    terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  }
  std::string name = name_.empty() ? other.name_ : name_ + "+" + other.name_;
  return BernsteinFunction(b_ + other.b_, nu_ + other.nu_, std::move(terms), name);
}

}  // namespace levym
