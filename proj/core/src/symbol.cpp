#include "levym/symbol.hpp"

#include <cmath>
#include <stdexcept>

namespace levym {

CharacteristicExponent::CharacteristicExponent(
    int d, bool radial, std::function<std::complex<double>(double)> line, std::string source)
    : d_(d), radial_(radial), line_(std::move(line)), source_(std::move(source)) {
  if (d < 1) throw std::invalid_argument("CharacteristicExponent: d must be >= 1");
}

std::complex<double> CharacteristicExponent::operator()(double r) const {
  if (r == 0.0 || !line_) return 0.0;
  if (r < 0.0) throw std::invalid_argument("CharacteristicExponent: r must be >= 0");
  return line_(r);
}

std::complex<double> CharacteristicExponent::evaluate(std::span<const double> xi) const {
  if (static_cast<int>(xi.size()) != d_)
    throw std::invalid_argument("CharacteristicExponent: argument dimension mismatch");
  double norm2 = 0.0;
  for (double x : xi) norm2 += x * x;
  const double r = std::sqrt(norm2);
  if (r == 0.0) return 0.0;
  if (radial_) return (*this)(r);
  if (d_ == 1) return xi[0] >= 0.0 ? (*this)(r) : std::conj((*this)(r));
  throw std::logic_error("CharacteristicExponent: non-radial evaluation needs d=1");
}

CharacteristicExponent brownian_symbol(int d, double scale) {
  if (scale < 0.0) throw std::invalid_argument("brownian_symbol: scale must be >= 0");
  return CharacteristicExponent(
      d, true, [scale](double r) { return std::complex<double>(0.5 * scale * r * r, 0.0); },
      "brownian");
}

CharacteristicExponent symmetric_stable_symbol(double alpha, int d) {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw std::invalid_argument("symmetric_stable_symbol: alpha must be in (0,2)");
  return CharacteristicExponent(
      d, true, [alpha](double r) { return std::complex<double>(std::pow(r, alpha), 0.0); },
      "symmetric-stable");
}

CharacteristicExponent zero_symbol(int d) {
  return CharacteristicExponent(d, true, [](double) { return std::complex<double>(0.0); },
                                "zero");
}

CharacteristicExponent symbol_from_bernstein(const BernsteinFunction& phi) {
  return CharacteristicExponent(
      1, false, [phi](double r) { return phi.continuation(r); },
      "bernstein-continuation:" + phi.name());
}

namespace {

// spherical mean of cos(r u . e1) over the unit sphere in R^d
double radial_cos_kernel(int d, double s) {
  if (s == 0.0) return 1.0;
  switch (d) {
    case 1: return std::cos(s);
    case 2: return std::cyl_bessel_j(0.0, s);
    case 3: return std::sin(s) / s;
    default:
      return std::tgamma(0.5 * d) * std::pow(2.0 / s, 0.5 * d - 1.0) *
             std::cyl_bessel_j(0.5 * d - 1.0, s);
  }
}

}  // namespace

CharacteristicExponent symbol_from_triplet(const LevyTriplet& triplet) {
  const int d = triplet.dim();
  const LevyMeasure& nu = triplet.nu;
  if (d > 1 && nu.symmetry() != MeasureSymmetry::symmetric && !nu.is_zero())
    throw std::invalid_argument("symbol_from_triplet: d >= 2 needs a radial measure");

  const bool radial_out =
      d > 1 || (triplet.ell[0] == 0.0 &&
                (nu.is_zero() || nu.symmetry() == MeasureSymmetry::symmetric));
  const double q11 = triplet.Q.dim() > 0 ? triplet.Q(0, 0) : 0.0;
  const double ell1 = triplet.ell[0];

  auto line = [d, nu, q11, ell1](double r) -> std::complex<double> {
    double re = 0.5 * q11 * r * r;
    double im = -ell1 * r;

    if (!nu.is_zero() && d == 1) {
      const bool odd_part = nu.symmetry() == MeasureSymmetry::one_sided_positive;
      const double split = 1.0 / r;
      for (const auto& c : nu.radial_components()) {
        const double lo = c.support_lo, hi = c.support_hi;
        const double s = std::min(std::max(split, lo), hi);
        if (s > lo) {
          SemiInfOptions opts;
          opts.support_lo = lo;
          opts.support_hi = s;
          opts.scale = s;
          auto fre = [&](double x) {
            const double t = std::sin(0.5 * r * x);
            return 2.0 * t * t * c.intensity(x);
          };
          re += integrate_semiinf(fre, 2.0 + c.sing_exponent, opts).value;
          if (odd_part) {
            // sin(rx) - rx 1_{x<1} is the compensated odd part, ~ -(rx)^3/6 near 0
            auto fim = [&](double x) {
              return (std::sin(r * x) - (x < 1.0 ? r * x : 0.0)) * c.intensity(x);
            };
            im -= integrate_semiinf(fim, 3.0 + c.sing_exponent, opts).value;
          }
        }
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
          re += comp_mass - integrate_oscillatory_tail(c.intensity, r, false, s, hi).value;
          if (odd_part) {
            im -= integrate_oscillatory_tail(c.intensity, r, true, s, hi).value;
            if (s < 1.0) {  // remaining compensator on [s, 1)
              SemiInfOptions lopts;
              lopts.support_lo = s;
              lopts.support_hi = std::min(1.0, hi);
              lopts.scale = s;
              auto flin = [&](double x) { return r * x * c.intensity(x); };
              im += integrate_semiinf(flin, 1.0 + c.sing_exponent, lopts).value;
            }
          }
        }
      }
      for (const Atom& a : nu.atoms()) {
        const double y = a.point[0];
        const double t = std::sin(0.5 * r * y);
        re += a.mass * 2.0 * t * t;
        im += a.mass * ((std::abs(y) < 1.0 ? r * y : 0.0) - std::sin(r * y));
      }
    } else if (!nu.is_zero()) {
      // d >= 2 radial: psi is real; odd part vanishes
      for (const auto& c : nu.radial_components()) {
        SemiInfOptions opts;
        opts.support_lo = c.support_lo;
        opts.support_hi = c.support_hi;
        opts.scale = std::min(std::max(1.0 / r, c.support_lo), c.support_hi);
        opts.check_divergence = true;
        auto fre = [&](double x) {
          return (1.0 - radial_cos_kernel(d, r * x)) * c.intensity(x);
        };
        QuadratureResult q = integrate_semiinf(fre, 2.0 + c.sing_exponent, opts);
        re += q.value;
      }
      for (const Atom& a : nu.atoms()) {
        re += a.mass * (1.0 - radial_cos_kernel(d, r * a.radius()));
      }
    }
    return {re, im};
  };

  return CharacteristicExponent(d, radial_out, line, "levy-khintchine:" + nu.name());
}

}  // namespace levym
