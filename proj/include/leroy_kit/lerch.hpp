#ifndef LEROY_KIT_LERCH_HPP
#define LEROY_KIT_LERCH_HPP

// Lerch transcendent and the functions built on it: polylogarithm, inverse
// tangent integral, Legendre chi, Hurwitz zeta and polygamma.

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "leroy_kit/errors.hpp"
#include "leroy_kit/eval_result.hpp"
#include "leroy_kit/gamma.hpp"
#include "leroy_kit/quadrature.hpp"
#include "leroy_kit/series.hpp"

namespace leroy_kit {

/// How a Lerch-type function is evaluated. automatic picks the series for
/// |zeta| <= 0.9 and the integral representation beyond.
enum class EvalMethod { automatic, series, integral };

inline constexpr double kAutoSeriesThreshold = 0.9;

struct LerchParams {
  double alpha = 1.0;
  double s = 1.0;
};

namespace detail {

inline void check_finite(double v, const char* who, const char* name) {
  if (!std::isfinite(v)) {
    throw domain_error(std::string(who) + ": " + name + " must be finite");
  }
}

// B_2, B_4, ..., B_16.
inline constexpr std::array<double, 8> kBernoulliEven = {
    1.0 / 6.0,    -1.0 / 30.0,   1.0 / 42.0,       -1.0 / 30.0,
    5.0 / 66.0,   -691.0 / 2730.0, 7.0 / 6.0,      -3617.0 / 510.0};

// 1 - zeta e^{-t}, without cancellation for zeta near 1 and small t.
inline double lerch_denominator(double zeta, double t) {
  if (zeta > 0.0) return (1.0 - zeta) - zeta * std::expm1(-t);
  return 1.0 - zeta * std::exp(-t);
}

inline EvalResult lerch_integral(double zeta, double alpha, double s,
                                 const QuadratureConfig& cfg) {
  const EvalResult r = integrate_semi_inf(
      [&](double t) {
        if (alpha * t > 700.0) return 0.0;
        return std::pow(t, s - 1.0) * std::exp(-alpha * t) / lerch_denominator(zeta, t);
      },
      cfg);
  return scaled(r, rgamma_pow(s, 1.0));
}

inline UmbralImage lerch_image(double alpha, double beta, double s) {
  return UmbralImage::exponential(GroundState::nu(alpha, beta, s));
}

}  // namespace detail

/// Hurwitz zeta sum_{r >= 0} (r + alpha)^{-s} for s > 1, alpha > 0.
///
/// Euler-Maclaurin: the first K terms explicitly, K chosen so that
/// alpha + K >= 10, then the tail integral with eight Bernoulli corrections.
inline EvalResult hurwitz_zeta(double s, double alpha) {
  detail::check_finite(s, "hurwitz_zeta", "s");
  detail::check_finite(alpha, "hurwitz_zeta", "alpha");
  if (!(s > 1.0)) throw domain_error("hurwitz_zeta: s must exceed 1");
  if (!(alpha > 0.0)) throw domain_error("hurwitz_zeta: alpha must be positive");
  // The remainder ratio behaves like ((s + 2j) / (2 pi a))^2; larger s needs a larger shift.
  const double shift = 10.0 + s;
  const int k = alpha >= shift ? 0 : static_cast<int>(std::ceil(shift - alpha));
  detail::CompensatedSum sum;
  for (int r = k - 1; r >= 0; --r) sum.add(std::pow(r + alpha, -s));
  const double a = alpha + k;
  sum.add(std::pow(a, 1.0 - s) / (s - 1.0));
  sum.add(0.5 * std::pow(a, -s));
  // (s)_{2j-1} a^{-s-2j+1} B_{2j} / (2j)!
  double poch = s;          // (s)_1
  double fact = 2.0;        // 2!
  double apow = std::pow(a, -s - 1.0);
  double last = 0.0;
  for (int j = 1; j <= 8; ++j) {
    last = detail::kBernoulliEven[j - 1] / fact * poch * apow;
    sum.add(last);
    poch *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
    apow /= a * a;
  }
  const double v = sum.value();
  const double err = std::abs(last) + 8.0 * std::numeric_limits<double>::epsilon() * std::abs(v);
  return {v, err, k + 8, Method::series};
}

/// Lerch transcendent Phi(zeta; alpha, s) = sum zeta^r / (r + alpha)^s.
///
/// The series needs |zeta| < 1. The integral
///   (1 / Gamma(s)) int_0^inf t^{s-1} e^{-alpha t} / (1 - zeta e^{-t}) dt
/// continues it to every real zeta < 1 (s > 0). zeta = 1 is the Hurwitz
/// zeta function and needs s > 1; zeta > 1 lies on the cut.
inline EvalResult lerch(double zeta, const LerchParams& p,
                        EvalMethod method = EvalMethod::automatic,
                        double tol = kDefaultSeriesTol, const QuadratureConfig& cfg = {}) {
  detail::check_finite(zeta, "lerch", "zeta");
  if (!(p.alpha > 0.0)) throw domain_error("lerch: alpha must be positive");
  if (zeta > 1.0) throw domain_error("lerch: zeta > 1 lies on the branch cut");
  if (zeta == 1.0) {
    if (!(p.s > 1.0)) throw domain_error("lerch: zeta = 1 requires s > 1");
    if (method == EvalMethod::integral) return detail::lerch_integral(zeta, p.alpha, p.s, cfg);
    return hurwitz_zeta(p.s, p.alpha);
  }
  if (zeta == 0.0) return {std::pow(p.alpha, -p.s), 0.0, 1, Method::series};
  const bool use_series =
      method == EvalMethod::series ||
      (method == EvalMethod::automatic && std::abs(zeta) <= kAutoSeriesThreshold);
  if (use_series) {
    if (zeta == -1.0) {
      if (p.s > 1.0) {
        // Split into even and odd r.
        const EvalResult e = hurwitz_zeta(p.s, 0.5 * p.alpha);
        const EvalResult o = hurwitz_zeta(p.s, 0.5 * (p.alpha + 1.0));
        const double f = std::pow(2.0, -p.s);
        return {f * (e.value - o.value), f * (e.abs_err + o.abs_err),
                std::max(e.terms_or_level, o.terms_or_level), Method::series};
      }
      if (!(p.s > 0.0)) throw domain_error("lerch: zeta = -1 requires s > 0");
      return detail::lerch_integral(zeta, p.alpha, p.s, cfg);
    }
    if (zeta < -1.0) throw domain_error("lerch: series diverges for zeta < -1");
    return sum_image(detail::lerch_image(p.alpha, 1.0, p.s), zeta, tol);
  }
  if (!(p.s > 0.0)) throw domain_error("lerch: integral representation requires s > 0");
  return detail::lerch_integral(zeta, p.alpha, p.s, cfg);
}

/// Generalised Lerch function sum (beta)_r zeta^r / ((r + alpha)^s r!), |zeta| < 1.
inline EvalResult lerch_gen(double zeta, double alpha, double beta, double s,
                            double tol = kDefaultSeriesTol) {
  detail::check_finite(zeta, "lerch_gen", "zeta");
  if (!(alpha > 0.0)) throw domain_error("lerch_gen: alpha must be positive");
  if (!(beta > 0.0)) throw domain_error("lerch_gen: beta must be positive");
  if (beta == 1.0) return lerch(zeta, {alpha, s}, EvalMethod::automatic, tol);
  return sum_image(detail::lerch_image(alpha, beta, s), zeta, tol);
}

/// n-th zeta-derivative of Phi(zeta; alpha, s): n! Phi(zeta; alpha + n, 1 + n, s).
inline EvalResult lerch_deriv(double zeta, double alpha, double s, int n,
                              double tol = kDefaultSeriesTol) {
  if (n < 0) throw domain_error("lerch_deriv: order must be nonnegative");
  return scaled(lerch_gen(zeta, alpha + n, 1.0 + n, s, tol), pochhammer(1.0, n));
}

/// n-th zeta-derivative of Phi(zeta; alpha, beta, s): (beta)_n Phi(zeta; alpha + n, beta + n, s).
inline EvalResult lerch_gen_deriv(double zeta, double alpha, double beta, double s, int n,
                                  double tol = kDefaultSeriesTol) {
  if (n < 0) throw domain_error("lerch_gen_deriv: order must be nonnegative");
  return scaled(lerch_gen(zeta, alpha + n, beta + n, s, tol), pochhammer(beta, n));
}

/// Li_s(zeta) = zeta Phi(zeta; 1, s), for real zeta <= 1.
inline EvalResult polylog(double s, double zeta, double tol = kDefaultSeriesTol) {
  detail::check_finite(s, "polylog", "s");
  if (zeta == 0.0) return {0.0, 0.0, 0, Method::series};
  return scaled(lerch(zeta, {1.0, s}, EvalMethod::automatic, tol), zeta);
}

/// g_s(zeta) = sum Gamma(1 + r/2) zeta^r / ((1 + r/2)^s r!), an entire function.
inline EvalResult polylog_half(double s, double zeta, double tol = kDefaultSeriesTol) {
  detail::check_finite(s, "polylog_half", "s");
  detail::check_finite(zeta, "polylog_half", "zeta");
  return sum_image(UmbralImage::index_scaled(GroundState::nu(1.0, 1.0, s), 0.5), zeta, tol);
}

/// Generalised inverse tangent integral sum (-1)^r zeta^{2r+1} / (2r+1)^s
/// = zeta 2^{-s} Phi(-zeta^2; 1/2, s), for |zeta| <= 1.
inline EvalResult ti_gen(double zeta, double s, double tol = kDefaultSeriesTol) {
  detail::check_finite(zeta, "ti_gen", "zeta");
  if (std::abs(zeta) > 1.0) throw domain_error("ti_gen: requires |zeta| <= 1");
  if (zeta == 0.0) return {0.0, 0.0, 0, Method::series};
  if (std::abs(zeta) == 1.0 && !(s > 0.0)) throw domain_error("ti_gen: |zeta| = 1 requires s > 0");
  return scaled(lerch(-zeta * zeta, {0.5, s}, EvalMethod::automatic, tol),
                zeta * std::pow(2.0, -s));
}

/// Two-variable Hermite polynomial n! sum x^{n-2r} y^r / ((n-2r)! r!).
inline double hermite_kdf(int n, double x, double y) {
  if (n < 0) throw domain_error("hermite_kdf: order must be nonnegative");
  double sum = 0.0;
  for (int r = 0; 2 * r <= n; ++r) {
    // n! / ((n-2r)! r!) as a product, exact for small n.
    double c = 1.0;
    for (int k = n - 2 * r + 1; k <= n; ++k) c *= k;
    for (int k = 2; k <= r; ++k) c /= k;
    sum += c * std::pow(x, n - 2 * r) * std::pow(y, r);
  }
  return sum;
}

/// n-th zeta-derivative of 2^s Ti(zeta)/zeta = Phi(-zeta^2; 1/2, s) by the
/// finite Hermite-type sum
///   (-1)^n n! sum_r (-1)^r (2 zeta)^{n-2r} / ((n-2r)! r!) (1)_{n-r} Phi(-zeta^2; n-r+1/2, 1+n-r, s).
inline EvalResult ti_gen_deriv(double zeta, double s, int n, double tol = kDefaultSeriesTol) {
  detail::check_finite(zeta, "ti_gen_deriv", "zeta");
  if (n < 0) throw domain_error("ti_gen_deriv: order must be nonnegative");
  if (!(std::abs(zeta) < 1.0)) throw domain_error("ti_gen_deriv: requires |zeta| < 1");
  const double x = -zeta * zeta;
  if (n == 0) return lerch(x, {0.5, s}, EvalMethod::automatic, tol);
  double value = 0.0, err = 0.0;
  int terms = 0;
  const double nfact = pochhammer(1.0, n);
  for (int r = 0; 2 * r <= n; ++r) {
    const int k = n - r;
    const EvalResult phi = lerch_gen(x, k + 0.5, 1.0 + k, s, tol);
    const double coef = nfact * ((n + r) % 2 == 0 ? 1.0 : -1.0) * std::pow(2.0 * zeta, n - 2 * r) /
                        (pochhammer(1.0, n - 2 * r) * pochhammer(1.0, r)) * pochhammer(1.0, k);
    value += coef * phi.value;
    err += std::abs(coef) * phi.abs_err;
    terms = std::max(terms, phi.terms_or_level);
  }
  return {value, err, terms, Method::series};
}

namespace detail {

inline UmbralImage chi_cosh_image(double s) { return UmbralImage::cosh(GroundState::nu(1.0, 1.0, s)); }
inline UmbralImage chi_sinh_image(double s) { return UmbralImage::sinh(GroundState::nu(1.0, 1.0, s)); }

inline EvalResult chi_integral(double s, double zeta, const QuadratureConfig& cfg) {
  const double z2 = zeta * zeta;
  const EvalResult r = integrate_semi_inf(
      [&](double t) {
        if (t > 700.0) return 0.0;
        // 1 - z2 e^{-2t} written to keep accuracy as z2 -> 1 and t -> 0.
        const double den = (1.0 - z2) - z2 * std::expm1(-2.0 * t);
        return std::pow(t, s - 1.0) * std::exp(-t) / den;
      },
      cfg);
  return scaled(r, zeta * rgamma_pow(s, 1.0));
}

inline void check_chi_args(double s, double zeta, const char* who) {
  check_finite(s, who, "s");
  check_finite(zeta, who, "zeta");
  if (std::abs(zeta) > 1.0) throw domain_error(std::string(who) + ": requires |zeta| <= 1");
  if (std::abs(zeta) == 1.0 && !(s > 1.0)) {
    throw domain_error(std::string(who) + ": |zeta| = 1 requires s > 1");
  }
}

}  // namespace detail

/// Legendre chi function sum zeta^{2r+1} / (2r+1)^s.
///
/// Series mode uses (zeta / 2^s) Phi(zeta^2; 1/2, s); the integral mode
///   (zeta / Gamma(s)) int t^{s-1} e^{-t} / (1 - zeta^2 e^{-2t}) dt
/// holds for |zeta| < 1 and, for s > 1, at |zeta| = 1 as well.
inline EvalResult legendre_chi(double s, double zeta, EvalMethod method = EvalMethod::automatic,
                               double tol = kDefaultSeriesTol, const QuadratureConfig& cfg = {}) {
  detail::check_chi_args(s, zeta, "legendre_chi");
  if (zeta == 0.0) return {0.0, 0.0, 0, Method::series};
  const bool use_series =
      method == EvalMethod::series ||
      (method == EvalMethod::automatic &&
       (std::abs(zeta) <= kAutoSeriesThreshold || std::abs(zeta) == 1.0));
  if (!use_series) {
    if (!(s > 0.0)) throw domain_error("legendre_chi: integral representation requires s > 0");
    return detail::chi_integral(s, zeta, cfg);
  }
  if (std::abs(zeta) == 1.0) {
    return scaled(hurwitz_zeta(s, 0.5), zeta * std::pow(2.0, -s));
  }
  return scaled(lerch(zeta * zeta, {0.5, s}, EvalMethod::series, tol), zeta * std::pow(2.0, -s));
}

/// Even part c_s(zeta) = sum zeta^{2r} / (2r+1)^s, so that zeta c_s = chi_s.
inline EvalResult chi_c(double s, double zeta, double tol = kDefaultSeriesTol) {
  detail::check_chi_args(s, zeta, "chi_c");
  if (std::abs(zeta) == 1.0) return scaled(hurwitz_zeta(s, 0.5), std::pow(2.0, -s));
  if (std::abs(zeta) > kAutoSeriesThreshold) {
    return scaled(legendre_chi(s, zeta, EvalMethod::integral, tol), 1.0 / zeta);
  }
  return sum_image(detail::chi_cosh_image(s), zeta, tol);
}

/// Odd part s_s(zeta) = sum zeta^{2r+1} / (2r+2)^s; c_s + s_s = Phi(zeta; 1, s).
inline EvalResult chi_s_part(double s, double zeta, double tol = kDefaultSeriesTol) {
  detail::check_chi_args(s, zeta, "chi_s_part");
  if (std::abs(zeta) == 1.0) return scaled(hurwitz_zeta(s, 1.0), zeta * std::pow(2.0, -s));
  if (std::abs(zeta) > kAutoSeriesThreshold) {
    const EvalResult whole = lerch(zeta, {1.0, s}, EvalMethod::integral, tol);
    const EvalResult even = chi_c(s, zeta, tol);
    return {whole.value - even.value, whole.abs_err + even.abs_err,
            std::max(whole.terms_or_level, even.terms_or_level), Method::quadrature};
  }
  return sum_image(detail::chi_sinh_image(s), zeta, tol);
}

/// d^{2n}/dzeta^{2n} c_s = sum (2r+1)_{2n} zeta^{2r} / (2r+2n+1)^s, |zeta| < 1.
inline EvalResult chi_c_deriv2n(double s, double zeta, int n, double tol = kDefaultSeriesTol) {
  if (n < 0) throw domain_error("chi_c_deriv2n: order must be nonnegative");
  detail::check_finite(zeta, "chi_c_deriv2n", "zeta");
  return sum_image_derivative(detail::chi_cosh_image(s), zeta, 2 * n, tol);
}

/// d^{2n}/dzeta^{2n} s_s = sum (2r+2)_{2n} zeta^{2r+1} / (2r+2n+2)^s, |zeta| < 1.
inline EvalResult chi_s_deriv2n(double s, double zeta, int n, double tol = kDefaultSeriesTol) {
  if (n < 0) throw domain_error("chi_s_deriv2n: order must be nonnegative");
  detail::check_finite(zeta, "chi_s_deriv2n", "zeta");
  return sum_image_derivative(detail::chi_sinh_image(s), zeta, 2 * n, tol);
}

namespace detail {

// Sum of an asymptotic-type series cut just before its smallest term.
// abs_err is that smallest term.
template <class TermFn>
EvalResult truncate_at_smallest_term(TermFn&& term, int max_terms) {
  CompensatedSum sum;
  double best = std::numeric_limits<double>::infinity();
  double at_best = 0.0;
  int n_best = 0;
  for (int m = 0; m < max_terms; ++m) {
    const SignedLog t = term(m);
    const double v = t.value();
    if (!std::isfinite(v)) break;
    if (std::abs(v) < best) {
      best = std::abs(v);
      at_best = sum.value();
      n_best = m;
      if (v == 0.0) break;
    } else if (std::abs(v) > 1e3 * best) {
      break;
    }
    sum.add(v);
  }
  if (n_best == max_terms - 1) {
    // Still decreasing: the whole partial sum is the estimate.
    return {sum.value(), best, max_terms, Method::series};
  }
  return {at_best, best, n_best, Method::series};
}

}  // namespace detail

/// The even-derivative series of c_s in the coefficient form
/// sum (2n+1)_{2r} zeta^{2r} / (2r+2n+1)^s. It has zero radius of
/// convergence for n >= 0; the value is the optimally truncated sum.
inline EvalResult chi_c_deriv2n_printed(double s, double zeta, int n, int max_terms = 400) {
  if (n < 0) throw domain_error("chi_c_deriv2n_printed: order must be nonnegative");
  const double lz = std::log(std::abs(zeta));
  return detail::truncate_at_smallest_term(
      [&](int r) -> detail::SignedLog {
        if (zeta == 0.0 && r > 0) return {-INFINITY, 0};
        const double lp = detail::pochhammer_log(2.0 * n + 1.0, 2.0 * r).log_abs;
        return {lp - s * std::log(2.0 * r + 2.0 * n + 1.0) + (r == 0 ? 0.0 : 2.0 * r * lz), 1};
      },
      max_terms);
}

/// The even-derivative series of s_s in the coefficient form
/// sum (2n+1)_{2r+1} zeta^{2r+1} / (2r+2n+2)^s, optimally truncated.
inline EvalResult chi_s_deriv2n_printed(double s, double zeta, int n, int max_terms = 400) {
  if (n < 0) throw domain_error("chi_s_deriv2n_printed: order must be nonnegative");
  if (zeta == 0.0) return {0.0, 0.0, 0, Method::series};
  const double lz = std::log(std::abs(zeta));
  const int zs = zeta < 0.0 ? -1 : 1;
  return detail::truncate_at_smallest_term(
      [&](int r) -> detail::SignedLog {
        const double lp = detail::pochhammer_log(2.0 * n + 1.0, 2.0 * r + 1.0).log_abs;
        return {lp - s * std::log(2.0 * r + 2.0 * n + 2.0) + (2.0 * r + 1.0) * lz, zs};
      },
      max_terms);
}

namespace detail {

inline void check_polygamma_args(int m, double alpha, const char* who) {
  if (m < 1) throw domain_error(std::string(who) + ": order m must be at least 1");
  check_finite(alpha, who, "alpha");
  if (!(alpha > 0.0)) throw domain_error(std::string(who) + ": alpha must be positive");
}

inline double polygamma_sign(int m) { return m % 2 == 1 ? 1.0 : -1.0; }  // (-1)^{m+1}

}  // namespace detail

/// psi^(m)(alpha) = (-1)^{m+1} m! zeta(m+1, alpha), m >= 1.
inline EvalResult polygamma(int m, double alpha) {
  detail::check_polygamma_args(m, alpha, "polygamma");
  return scaled(hurwitz_zeta(m + 1.0, alpha), detail::polygamma_sign(m) * pochhammer(1.0, m));
}

/// psi^(m)(alpha) from (-1)^{m+1} int_0^inf t^m e^{-alpha t} / (1 - e^{-t}) dt.
inline EvalResult polygamma_integral(int m, double alpha, const QuadratureConfig& cfg = {}) {
  detail::check_polygamma_args(m, alpha, "polygamma_integral");
  const EvalResult r = integrate_semi_inf(
      [&](double t) {
        if (alpha * t > 700.0) return 0.0;
        return std::pow(t, m) * std::exp(-alpha * t) / -std::expm1(-t);
      },
      cfg);
  return scaled(r, detail::polygamma_sign(m));
}

/// Two-variable polygamma (-1)^{m+1} m! Phi(zeta; alpha, m+1), zeta <= 1.
/// At zeta = 1 it reduces to polygamma(m, alpha).
inline EvalResult polygamma2(int m, double alpha, double zeta, double tol = kDefaultSeriesTol) {
  detail::check_polygamma_args(m, alpha, "polygamma2");
  if (zeta > 1.0) throw domain_error("polygamma2: zeta must not exceed 1");
  return scaled(lerch(zeta, {alpha, m + 1.0}, EvalMethod::automatic, tol),
                detail::polygamma_sign(m) * pochhammer(1.0, m));
}

/// Two-variable polygamma from (-1)^{m+1} int t^m e^{-alpha t} / (1 - zeta e^{-t}) dt.
inline EvalResult polygamma2_integral(int m, double alpha, double zeta,
                                      const QuadratureConfig& cfg = {}) {
  detail::check_polygamma_args(m, alpha, "polygamma2_integral");
  if (zeta > 1.0) throw domain_error("polygamma2_integral: zeta must not exceed 1");
  const EvalResult r = integrate_semi_inf(
      [&](double t) {
        if (alpha * t > 700.0) return 0.0;
        return std::pow(t, m) * std::exp(-alpha * t) / detail::lerch_denominator(zeta, t);
      },
      cfg);
  return scaled(r, detail::polygamma_sign(m));
}

/// m! Phi(zeta; alpha, m+1), the relation without the (-1)^{m+1} factor.
inline EvalResult polygamma2_printed(int m, double alpha, double zeta,
                                     double tol = kDefaultSeriesTol) {
  detail::check_polygamma_args(m, alpha, "polygamma2_printed");
  if (zeta > 1.0) throw domain_error("polygamma2_printed: zeta must not exceed 1");
  return scaled(lerch(zeta, {alpha, m + 1.0}, EvalMethod::automatic, tol), pochhammer(1.0, m));
}

}  // namespace leroy_kit

#endif  // LEROY_KIT_LERCH_HPP
