#ifndef LEROY_KIT_SERIES_HPP
#define LEROY_KIT_SERIES_HPP

// Summation of umbral images: power series whose r-th coefficient is a
// ground-state value. The umbral operator acts as u^r [g] = g(r), so
// e^{zeta u}[g] = sum g(r) zeta^r / r!, and the other image kinds follow
// the same pattern.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "leroy_kit/errors.hpp"
#include "leroy_kit/eval_result.hpp"
#include "leroy_kit/gamma.hpp"

namespace leroy_kit {

inline constexpr int kDefaultMaxTerms = 10000;
inline constexpr double kDefaultSeriesTol = 1e-15;

enum class ImageKind {
  exponential,   // sum g(r) zeta^r / r!
  geometric,     // sum g(r) zeta^r
  cosh,          // sum g(2r) zeta^{2r} / (2r)!
  sinh,          // sum g(2r+1) zeta^{2r+1} / (2r+1)!
  shifted,       // sum g(r + lambda) zeta^r / r!
  index_scaled,  // sum g(c r) zeta^r / r!
};

/// A ground state together with the series shape applied to it.
struct UmbralImage {
  GroundState ground;
  ImageKind kind = ImageKind::exponential;
  double param = 0.0;  // lambda for shifted, c for index_scaled

  static UmbralImage exponential(GroundState g) { return {std::move(g), ImageKind::exponential}; }
  static UmbralImage geometric(GroundState g) { return {std::move(g), ImageKind::geometric}; }
  static UmbralImage cosh(GroundState g) { return {std::move(g), ImageKind::cosh}; }
  static UmbralImage sinh(GroundState g) { return {std::move(g), ImageKind::sinh}; }
  static UmbralImage shifted(GroundState g, double lambda) {
    return {std::move(g), ImageKind::shifted, lambda};
  }
  static UmbralImage index_scaled(GroundState g, double c) {
    if (!(c > 0.0)) throw domain_error("index_scaled image: scale must be positive");
    return {std::move(g), ImageKind::index_scaled, c};
  }
};

namespace detail {

enum class Shape { exponential, geometric, cosh, sinh };

// Every image kind and all of its derivatives reduce to one of four
// shapes with an affine index map t = scale * m + shift, where m is the
// power of zeta. Geometric derivatives carry a (r+1)_n weight.
struct AffineImage {
  Shape shape = Shape::exponential;
  double scale = 1.0;
  double shift = 0.0;
  int geometric_order = 0;
};

inline AffineImage lower(const UmbralImage& img) {
  switch (img.kind) {
    case ImageKind::exponential:
      return {Shape::exponential};
    case ImageKind::geometric:
      return {Shape::geometric};
    case ImageKind::cosh:
      return {Shape::cosh};
    case ImageKind::sinh:
      return {Shape::sinh};
    case ImageKind::shifted:
      return {Shape::exponential, 1.0, img.param};
    case ImageKind::index_scaled:
      return {Shape::exponential, img.param, 0.0};
  }
  return {};
}

inline AffineImage differentiate(AffineImage a, int n) {
  switch (a.shape) {
    case Shape::exponential:
      a.shift += a.scale * n;
      break;
    case Shape::geometric:
      a.geometric_order += n;
      a.shift += n;
      break;
    case Shape::cosh:
    case Shape::sinh:
      for (int k = 0; k < n; ++k) {
        a.shape = a.shape == Shape::cosh ? Shape::sinh : Shape::cosh;
        a.shift += 1.0;
      }
      break;
  }
  return a;
}

// Asymptotic profile of a ground state: log|g(t)| ~ a (t ln t - t) + t ln B.
struct GrowthProfile {
  double a = 0.0;
  double log_b = 0.0;
};

inline GrowthProfile growth_profile(const GroundState& g) {
  const double al = g.alpha();
  switch (g.family()) {
    case GroundFamily::phi_pow:
      return {-al * g.third(), -al * g.third() * std::log(al)};
    case GroundFamily::psi:
      return {1.0 - al, -al * std::log(al)};
    case GroundFamily::nu:
      return {1.0, 0.0};
  }
  return {};
}

// Radius of convergence in zeta; +inf for entire images, 0 for divergent.
inline double convergence_radius(const GroundState& g, const AffineImage& img) {
  const GrowthProfile p = growth_profile(g);
  double kappa = 0.0;
  double log_rate = 0.0;
  switch (img.shape) {
    case Shape::exponential: {
      const double c = img.scale;
      kappa = 1.0 - p.a * c;
      log_rate = p.a * c * std::log(c) + c * p.log_b;
      break;
    }
    case Shape::cosh:
    case Shape::sinh:
      kappa = 1.0 - p.a;
      log_rate = p.log_b;
      break;
    case Shape::geometric:
      kappa = -p.a;
      log_rate = p.log_b;
      break;
  }
  constexpr double kTiny = 1e-12;
  if (kappa > kTiny) return std::numeric_limits<double>::infinity();
  if (kappa < -kTiny) return 0.0;
  return std::exp(-log_rate);
}

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double log_factorial(double m) { return lgamma_signed(m + 1.0).log_abs; }

// Sums terms term(m) for m = 0, 1, ... with the stopping rule shared by
// every series in the library: stop once |term| < tol |sum| for three
// consecutive terms. term returns the signed log of the term and the
// scale of its log (for the rounding estimate).
template <class TermFn>
EvalResult sum_terms(TermFn&& term, double tol, int max_terms) {
  if (!(tol > 0.0)) throw domain_error("series: tol must be positive");
  if (max_terms < 1) throw domain_error("series: max_terms must be at least 1");
  constexpr double eps = std::numeric_limits<double>::epsilon();
  CompensatedSum sum;
  double rounding = 0.0;
  double last = 0.0;
  int small_run = 0;
  for (int m = 0; m < max_terms; ++m) {
    const SignedLog lt = term(m);
    const double v = lt.value();
    if (!std::isfinite(v)) {
      throw convergence_error("series: term " + std::to_string(m) + " overflowed");
    }
    sum.add(v);
    rounding += std::abs(v) * eps * (2.0 + std::abs(lt.log_abs));
    last = v;
    if (std::abs(v) < tol * std::abs(sum.value())) {
      if (++small_run == 3) {
        return {sum.value(), 10.0 * std::abs(last) + rounding, m + 1, Method::series};
      }
    } else {
      small_run = 0;
    }
  }
  throw convergence_error("series: no convergence within " + std::to_string(max_terms) +
                          " terms");
}

inline EvalResult sum_affine(const GroundState& g, const AffineImage& img, double zeta,
                             double tol, int max_terms) {
  const double radius = convergence_radius(g, img);
  if (zeta != 0.0 && std::abs(zeta) >= radius) {
    throw convergence_error("series: |zeta| = " + std::to_string(std::abs(zeta)) +
                            " is outside the radius of convergence " + std::to_string(radius));
  }
  const double log_z = zeta == 0.0 ? -INFINITY : std::log(std::abs(zeta));
  const int z_sign = zeta < 0.0 ? -1 : 1;

  auto term = [&](int r) -> SignedLog {
    int power = r;
    double log_div = 0.0;
    double weight = 0.0;
    switch (img.shape) {
      case Shape::exponential:
        log_div = log_factorial(r);
        break;
      case Shape::geometric:
        if (img.geometric_order > 0) {
          weight = pochhammer_log(r + 1.0, img.geometric_order).log_abs;
        }
        break;
      case Shape::cosh:
        power = 2 * r;
        log_div = log_factorial(power);
        break;
      case Shape::sinh:
        power = 2 * r + 1;
        log_div = log_factorial(power);
        break;
    }
    if (zeta == 0.0 && power > 0) return {-INFINITY, 0};
    const double t = img.shape == Shape::exponential ? img.scale * r + img.shift
                                                     : static_cast<double>(power) + img.shift;
    const SignedLog gv = ground_log(g, img.shape == Shape::geometric ? r + img.shift : t);
    if (gv.sign == 0) return {-INFINITY, 0};
    const int sign = gv.sign * ((z_sign < 0 && power % 2 == 1) ? -1 : 1);
    const double zpart = power == 0 ? 0.0 : power * log_z;
    return {gv.log_abs + weight + zpart - log_div, sign};
  };

  if (zeta == 0.0) {
    // Only the m = 0 term survives.
    const SignedLog t0 = term(0);
    return {t0.value(), 0.0, 1, Method::series};
  }
  return sum_terms(term, tol, max_terms);
}

}  // namespace detail

/// Sums the umbral image at zeta with compensated summation.
///
/// Stops once |term| < tol |partial sum| for three consecutive terms and
/// reports abs_err = 10 |last term| plus an estimate of the accumulated
/// rounding. Images whose radius of convergence does not exceed |zeta|
/// are refused up front with convergence_error.
inline EvalResult sum_image(const UmbralImage& img, double zeta, double tol = kDefaultSeriesTol,
                            int max_terms = kDefaultMaxTerms) {
  return detail::sum_affine(img.ground, detail::lower(img), zeta, tol, max_terms);
}

/// n-th zeta-derivative of the image, by shifting the ground-state index
/// (u^n e^{zeta u}[g] = sum g(r + n) zeta^r / r! and its analogues).
inline EvalResult sum_image_derivative(const UmbralImage& img, double zeta, int n,
                                       double tol = kDefaultSeriesTol,
                                       int max_terms = kDefaultMaxTerms) {
  if (n < 0) throw domain_error("sum_image_derivative: order must be nonnegative");
  return detail::sum_affine(img.ground, detail::differentiate(detail::lower(img), n), zeta, tol,
                            max_terms);
}

// ---------------------------------------------------------------------------
// Exponential images at negative argument.
//
// e^{-x u}[g] = sum g(r) (-x)^r / r! equals the Mellin-Barnes integral
//   (1 / 2 pi i) int_{c - i inf}^{c + i inf} Gamma(s) g(-s) x^{-s} ds
// whenever g(-s) is analytic for Re s < c' (c < c') and the integrand decays
// along the line; closing the contour to the left picks up the residues of
// Gamma(s) at s = -r. This is the route used when the alternating series
// loses too many digits to cancellation.

struct MellinBarnesPlan {
  double abscissa = 0.5;   // c
  double strip = 1.0;      // distance from c to the nearest singularity
  double decay_rate = 0.0; // |integrand| ~ exp(-decay_rate |y|)
};

namespace detail {

inline constexpr double kMinDecayRate = 0.25;

inline std::optional<MellinBarnesPlan> mellin_barnes_plan(const GroundState& g) {
  const double a = g.alpha(), b = g.beta(), p = g.third();
  constexpr double half_pi = 0.5 * std::numbers::pi;
  double c_max = std::numeric_limits<double>::infinity();
  double rate = 0.0;
  switch (g.family()) {
    case GroundFamily::phi_pow:
      if (p != 0.0 && !(p > 0.0 && is_integer(p))) {
        // Fractional or negative powers need Re(beta + alpha t) > 0.
        c_max = b / a;
      }
      rate = half_pi * (1.0 - p * a);
      break;
    case GroundFamily::psi:
      c_max = p;
      rate = half_pi * (2.0 - a);
      break;
    case GroundFamily::nu:
      c_max = std::min(a, b);
      rate = std::numbers::pi;
      break;
  }
  if (!(c_max > 0.0) || rate < kMinDecayRate) return std::nullopt;
  MellinBarnesPlan plan;
  plan.abscissa = std::isfinite(c_max) ? std::min(0.5, 0.5 * c_max) : 0.5;
  plan.strip = std::isfinite(c_max) ? std::min(plan.abscissa, c_max - plan.abscissa)
                                    : plan.abscissa;
  plan.decay_rate = rate;
  return plan;
}

}  // namespace detail

/// Whether e^{-x u}[g] admits the Mellin-Barnes evaluation.
inline bool mellin_barnes_applicable(const GroundState& g) {
  return detail::mellin_barnes_plan(g).has_value();
}

/// sum g(r) (-x)^r / r! for x > 0 through the Mellin-Barnes integral,
/// discretised by the trapezoid rule on the vertical line Re s = c. The
/// step is chosen from the width of the analyticity strip so that the
/// discretisation error sits near double precision.
inline EvalResult mellin_barnes_exponential(const GroundState& g, double x) {
  if (!(x > 0.0)) throw domain_error("mellin_barnes_exponential: x must be positive");
  const auto plan = detail::mellin_barnes_plan(g);
  if (!plan) {
    throw domain_error("mellin_barnes_exponential: ground state has no admissible contour");
  }
  const double c = plan->abscissa;
  const double d = plan->strip;
  const double log_x = std::log(x);
  const double h = 2.0 * std::numbers::pi * d / (40.0 + d * std::abs(log_x));
  const double y_max = 48.0 / plan->decay_rate;
  const int n = static_cast<int>(std::ceil(y_max / h));

  auto integrand = [&](double y) {
    const std::complex<double> s(c, y);
    const std::complex<double> lg =
        detail::lgamma_complex(s) + detail::ground_log_complex(g, -s) - s * log_x;
    return std::exp(lg);
  };

  detail::CompensatedSum sum;
  double l1 = 0.0;
  const std::complex<double> f0 = integrand(0.0);
  sum.add(f0.real());
  l1 += std::abs(f0);
  double last = 0.0;
  for (int k = 1; k <= n; ++k) {
    const std::complex<double> f = integrand(k * h);
    if (!std::isfinite(f.real())) {
      throw convergence_error("mellin_barnes_exponential: integrand overflow");
    }
    sum.add(2.0 * f.real());
    l1 += 2.0 * std::abs(f);
    last = std::abs(f);
  }
  const double scale = h / (2.0 * std::numbers::pi);
  const double err =
      scale * (64.0 * std::numeric_limits<double>::epsilon() * l1 + 10.0 * last);
  return {scale * sum.value(), err, n + 1, Method::quadrature};
}

/// Exponential image of g at any real zeta. Negative arguments whose series
/// is ill-conditioned (or would overflow) go through the Mellin-Barnes
/// integral when the ground state admits it; everything else is summed.
inline EvalResult evaluate_exponential(const GroundState& g, double zeta,
                                       double tol = kDefaultSeriesTol,
                                       int max_terms = kDefaultMaxTerms) {
  const UmbralImage img = UmbralImage::exponential(g);
  if (zeta >= 0.0 || !mellin_barnes_applicable(g)) return sum_image(img, zeta, tol, max_terms);

  // Largest series term ~ exp(kappa (x K)^{1/kappa}) for an entire image.
  const detail::GrowthProfile p = detail::growth_profile(g);
  const double kappa = 1.0 - p.a;
  const double x = -zeta;
  if (kappa > 0.0) {
    const double log_peak = kappa * std::exp((std::log(x) + p.log_b) / kappa);
    if (log_peak > 36.0) return mellin_barnes_exponential(g, x);
  }
  const EvalResult series = sum_image(img, zeta, tol, max_terms);
  if (series.abs_err <= std::max(tol, 1e-14) * std::abs(series.value)) return series;
  const EvalResult mb = mellin_barnes_exponential(g, x);
  return mb.abs_err < series.abs_err ? mb : series;
}

}  // namespace leroy_kit

#endif  // LEROY_KIT_SERIES_HPP
