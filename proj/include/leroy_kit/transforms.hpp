#ifndef LEROY_KIT_TRANSFORMS_HPP
#define LEROY_KIT_TRANSFORMS_HPP

// Borel and Borel-Le Roy transforms, Gaussian integrals of Le Roy type
// functions, and integral resummation of the Euler series.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "leroy_kit/errors.hpp"
#include "leroy_kit/eval_result.hpp"
#include "leroy_kit/gamma.hpp"
#include "leroy_kit/leroy.hpp"
#include "leroy_kit/quadrature.hpp"

namespace leroy_kit {

namespace detail {

// e^{-t} is below the smallest normal double past this point.
inline constexpr double kExpCutoff = 700.0;

// Past this the algebraically decaying integrands below are zero to double
// precision once multiplied by any quadrature weight.
inline constexpr double kHugeArgument = 1e200;

}  // namespace detail

/// Borel transform int_0^inf e^{-t} L(zeta t; mu) dt, equal to L(zeta; mu - 1).
inline EvalResult borel_transform_leroy(double zeta, double mu, const QuadratureConfig& cfg = {}) {
  if (!std::isfinite(zeta) || !std::isfinite(mu)) {
    throw domain_error("borel_transform_leroy: arguments must be finite");
  }
  if (!(mu >= 1.0)) throw domain_error("borel_transform_leroy: requires mu >= 1");
  if (mu == 1.0 && !(zeta < 1.0)) {
    throw domain_error("borel_transform_leroy: mu = 1 requires zeta < 1");
  }
  return integrate_semi_inf(
      [&](double t) {
        if (t > detail::kExpCutoff) return 0.0;
        return std::exp(-t) * leroy(zeta * t, mu).value;
      },
      cfg);
}

/// Borel-Le Roy transform int_0^inf e^{-t} t^beta L(zeta t^alpha; alpha, beta, mu) dt,
/// equal to L(zeta; alpha, beta, mu - 1).
inline EvalResult borel_leroy_transform_gen(double zeta, const LeRoyParams& p,
                                            const QuadratureConfig& cfg = {}) {
  p.validate();
  if (!std::isfinite(zeta)) throw domain_error("borel_leroy_transform_gen: zeta must be finite");
  if (!(p.beta > -1.0)) throw domain_error("borel_leroy_transform_gen: requires beta > -1");
  return integrate_semi_inf(
      [&](double t) {
        if (t > detail::kExpCutoff) return 0.0;
        return std::exp(-t) * std::pow(t, p.beta) *
               leroy_gen(zeta * std::pow(t, p.alpha), p).value;
      },
      cfg);
}

/// The same transform with weight t^mu and argument zeta t^beta.
inline EvalResult borel_leroy_transform_gen_printed(double zeta, const LeRoyParams& p,
                                                    const QuadratureConfig& cfg = {}) {
  p.validate();
  if (!std::isfinite(zeta)) {
    throw domain_error("borel_leroy_transform_gen_printed: zeta must be finite");
  }
  if (!(p.mu > -1.0)) throw domain_error("borel_leroy_transform_gen_printed: requires mu > -1");
  return integrate_semi_inf(
      [&](double t) {
        if (t > detail::kExpCutoff) return 0.0;
        return std::exp(-t) * std::pow(t, p.mu) * leroy_gen(zeta * std::pow(t, p.beta), p).value;
      },
      cfg);
}

/// Gauss transform int e^{-x^2} f(2 x zeta) dx over the real line.
template <class F>
EvalResult gauss_transform(F&& f, double zeta, const QuadratureConfig& cfg = {}) {
  if (!std::isfinite(zeta)) throw domain_error("gauss_transform: zeta must be finite");
  return integrate_real_line(
      [&](double x) {
        const double x2 = x * x;
        if (x2 > detail::kExpCutoff) return 0.0;
        return std::exp(-x2) * f(2.0 * x * zeta);
      },
      cfg);
}

/// int L(-zeta^2; 1/2) dzeta over the real line; equals pi^{3/4}.
inline EvalResult kolokoltsov_integral(const QuadratureConfig& cfg = {}) {
  return integrate_real_line(
      [](double z) {
        const double x = z * z;
        return x < detail::kHugeArgument ? leroy(-x, 0.5).value : 0.0;
      },
      cfg);
}

/// int E_{alpha,beta,gamma}(-zeta^2) dzeta over the real line by quadrature.
/// The integrand decays like |zeta|^{-2 gamma}, so gamma > 1/2 is needed.
inline EvalResult prabhakar_gauss_integral(double alpha, double beta, double gamma_,
                                           const QuadratureConfig& cfg = {}) {
  if (!(gamma_ > 0.5)) {
    throw domain_error("prabhakar_gauss_integral: integrand is not integrable for gamma <= 1/2");
  }
  if (!(beta - 0.5 * alpha > 0.0)) {
    throw domain_error("prabhakar_gauss_integral: requires beta - alpha/2 > 0");
  }
  return integrate_real_line(
      [&](double z) {
        const double x = z * z;
        return x < detail::kHugeArgument ? prabhakar(-x, alpha, beta, gamma_).value : 0.0;
      },
      cfg);
}

/// sqrt(pi) (gamma)_{-1/2} / Gamma(beta - alpha/2).
inline double prabhakar_gauss_closed_form(double alpha, double beta, double gamma_) {
  return std::sqrt(std::numbers::pi) * pochhammer(gamma_, -0.5) *
         rgamma_pow(beta - 0.5 * alpha, 1.0);
}

/// Resummed Euler series int_0^inf e^{-t} / (1 + x t) dt, x >= 0.
inline EvalResult euler_d1_bar(double x, const QuadratureConfig& cfg = {}) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw domain_error("euler_d1_bar: requires x >= 0");
  return integrate_semi_inf(
      [&](double t) {
        if (t > detail::kExpCutoff) return 0.0;
        return std::exp(-t) / (1.0 + x * t);
      },
      cfg);
}

/// Generalised double resummation int int e^{-(u+v)} (uv)^beta / (1 + (uv)^alpha x) du dv.
inline EvalResult euler_d2_bar_gen(double x, double alpha, double beta,
                                   const QuadratureConfig& cfg = {}) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw domain_error("euler_d2_bar_gen: requires x >= 0");
  if (!(alpha > 0.0)) throw domain_error("euler_d2_bar_gen: alpha must be positive");
  if (!(beta > -1.0)) throw domain_error("euler_d2_bar_gen: requires beta > -1");
  return integrate_semi_inf_2d(
      [&](double u, double v) {
        if (u + v > detail::kExpCutoff) return 0.0;
        const double uv = u * v;
        const double w = beta == 0.0 ? 1.0 : std::pow(uv, beta);
        const double d = 1.0 + (alpha == 1.0 ? uv : std::pow(uv, alpha)) * x;
        return std::exp(-(u + v)) * w / d;
      },
      cfg);
}

/// Resummed d_2: int int e^{-(u+v)} / (1 + u v x) du dv.
inline EvalResult euler_d2_bar(double x, const QuadratureConfig& cfg = {}) {
  return euler_d2_bar_gen(x, 1.0, 0.0, cfg);
}

/// |x^2 y' + y - x| for y = x d1bar(x), y' by a central difference.
inline double euler_ode_residual(double x, const QuadratureConfig& cfg = {}) {
  if (!(x > 0.0) || !std::isfinite(x)) throw domain_error("euler_ode_residual: requires x > 0");
  QuadratureConfig tight = cfg;
  tight.rel_tol = std::min(cfg.rel_tol, 1e-13);
  tight.abs_tol = std::min(cfg.abs_tol, 1e-16);
  tight.max_level = std::max(cfg.max_level, 14);
  auto y = [&](double t) { return t * euler_d1_bar(t, tight).value; };
  const double h = 1e-5 * std::max(1.0, x);
  const double dy = (y(x + h) - y(x - h)) / (2.0 * h);
  return std::abs(x * x * dy + y(x) - x);
}

enum class DivergentKind { d1, d2, d2_gen };

/// sum (-1)^r c_r x^r with c_r = r!, (r!)^2 or Gamma(1 + beta + alpha r)^2.
struct DivergentSeriesSpec {
  DivergentKind kind = DivergentKind::d1;
  double alpha = 1.0;
  double beta = 0.0;

  static DivergentSeriesSpec d1() { return {DivergentKind::d1}; }
  static DivergentSeriesSpec d2() { return {DivergentKind::d2}; }
  static DivergentSeriesSpec d2_gen(double alpha, double beta) {
    return {DivergentKind::d2_gen, alpha, beta};
  }

  // log c_r.
  double log_coefficient(int r) const {
    switch (kind) {
      case DivergentKind::d1:
        return detail::lgamma_signed(r + 1.0).log_abs;
      case DivergentKind::d2:
        return 2.0 * detail::lgamma_signed(r + 1.0).log_abs;
      case DivergentKind::d2_gen:
        return 2.0 * detail::lgamma_signed(1.0 + beta + alpha * r).log_abs;
    }
    return 0.0;
  }

  void validate() const {
    if (kind == DivergentKind::d2_gen) {
      if (!(alpha > 0.0)) throw domain_error("DivergentSeriesSpec: alpha must be positive");
      if (!(beta > -1.0)) throw domain_error("DivergentSeriesSpec: requires beta > -1");
    }
  }
};

inline constexpr int kMaxPartialSums = 40;

/// The first N partial sums of the divergent series at x.
inline std::vector<double> divergent_partial_sums(const DivergentSeriesSpec& spec, double x,
                                                  int n) {
  spec.validate();
  if (n < 0) throw domain_error("divergent_partial_sums: N must be nonnegative");
  if (n > kMaxPartialSums) {
    throw domain_error("divergent_partial_sums: N above " + std::to_string(kMaxPartialSums) +
                       " is not supported (coefficient overflow guard)");
  }
  std::vector<double> out;
  out.reserve(n);
  detail::CompensatedSum sum;
  for (int r = 0; r < n; ++r) {
    const double term = std::exp(spec.log_coefficient(r)) * std::pow(-x, r);
    if (!std::isfinite(term)) throw domain_error("divergent_partial_sums: term overflow");
    sum.add(term);
    out.push_back(sum.value());
  }
  return out;
}

struct OptimalTruncation {
  double value = 0.0;     // partial sum of the terms before the smallest one
  double min_term = 0.0;  // magnitude of the smallest term
  int index = 0;          // index of the smallest term
};

/// Superasymptotic value of the divergent series at x > 0: the sum of all
/// terms before the smallest one.
inline OptimalTruncation optimal_truncation(const DivergentSeriesSpec& spec, double x) {
  spec.validate();
  if (!(x > 0.0)) throw domain_error("optimal_truncation: requires x > 0");
  constexpr int kScan = 400;
  detail::CompensatedSum sum;
  OptimalTruncation best{0.0, std::numeric_limits<double>::infinity(), 0};
  for (int r = 0; r < kScan; ++r) {
    const double log_t = spec.log_coefficient(r) + r * std::log(x);
    const double mag = std::exp(log_t);
    if (mag < best.min_term) {
      best = {sum.value(), mag, r};
    } else if (log_t > std::log(best.min_term) + 5.0) {
      break;
    }
    sum.add(r % 2 == 0 ? mag : -mag);
  }
  return best;
}

}  // namespace leroy_kit

#endif  // LEROY_KIT_TRANSFORMS_HPP
