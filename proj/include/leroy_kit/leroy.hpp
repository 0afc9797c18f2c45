#ifndef LEROY_KIT_LEROY_HPP
#define LEROY_KIT_LEROY_HPP

// Le Roy type functions and the three-parameter Mittag-Leffler (Prabhakar)
// function, as umbral images of the phi and psi ground states.

#include <cmath>
#include <string>

#include "leroy_kit/errors.hpp"
#include "leroy_kit/eval_result.hpp"
#include "leroy_kit/gamma.hpp"
#include "leroy_kit/series.hpp"

namespace leroy_kit {

struct LeRoyParams {
  double alpha = 1.0;
  double beta = 0.0;
  double mu = 1.0;

  void validate() const {
    if (!(alpha > 0.0)) throw domain_error("Le Roy parameters: alpha must be positive");
    if (!std::isfinite(beta) || !std::isfinite(mu)) {
      throw domain_error("Le Roy parameters: beta and mu must be finite");
    }
  }
};

namespace detail {

inline void check_zeta(double zeta, const char* who) {
  if (!std::isfinite(zeta)) throw domain_error(std::string(who) + ": zeta must be finite");
}

}  // namespace detail

/// L(zeta; mu) = sum zeta^r / Gamma(1 + r)^mu.
///
/// For mu > 0 this is e^{zeta u} applied to 1/Gamma(1 + t)^{mu - 1}, which is
/// entire; negative zeta may go through the Mellin-Barnes route. For
/// mu <= 0 the geometric image of 1/Gamma(1 + t)^mu is summed: mu = 0 is
/// the geometric series (|zeta| < 1) and mu < 0 has zero radius.
inline EvalResult leroy(double zeta, double mu, double tol = kDefaultSeriesTol,
                        int max_terms = kDefaultMaxTerms) {
  detail::check_zeta(zeta, "leroy");
  if (mu > 0.0) {
    return evaluate_exponential(GroundState::phi_pow(1.0, 1.0, mu - 1.0), zeta, tol, max_terms);
  }
  return sum_image(UmbralImage::geometric(GroundState::phi_pow(1.0, 1.0, mu)), zeta, tol,
                   max_terms);
}

/// L(zeta; alpha, beta, mu) = sum zeta^r / (r! Gamma(1 + beta + alpha r)^{mu - 1}).
inline EvalResult leroy_gen(double zeta, const LeRoyParams& p, double tol = kDefaultSeriesTol,
                            int max_terms = kDefaultMaxTerms) {
  detail::check_zeta(zeta, "leroy_gen");
  p.validate();
  return evaluate_exponential(GroundState::phi_pow(p.alpha, 1.0 + p.beta, p.mu - 1.0), zeta, tol,
                              max_terms);
}

/// n-th derivative of L(zeta; mu) in closed form: L(zeta; 1, n, mu).
inline EvalResult leroy_deriv(double zeta, double mu, int n, double tol = kDefaultSeriesTol,
                              int max_terms = kDefaultMaxTerms) {
  if (n < 0) throw domain_error("leroy_deriv: order must be nonnegative");
  return leroy_gen(zeta, {1.0, static_cast<double>(n), mu}, tol, max_terms);
}

/// Four-parameter series sum x^r / (Gamma(1 + beta + alpha r) Gamma(1 + delta + gamma r)).
inline EvalResult leroy4(double zeta, double alpha, double beta, double gamma_, double delta,
                         double tol = kDefaultSeriesTol, int max_terms = kDefaultMaxTerms) {
  detail::check_zeta(zeta, "leroy4");
  if (!(alpha > 0.0) || !(gamma_ > 0.0)) {
    throw domain_error("leroy4: alpha and gamma must be positive");
  }
  // 1 + beta + alpha r <= 0 only for finitely many r.
  for (int r = 0; 1.0 + beta + alpha * r <= 0.0 || 1.0 + delta + gamma_ * r <= 0.0; ++r) {
    if (detail::is_nonpositive_integer(1.0 + beta + alpha * r) ||
        detail::is_nonpositive_integer(1.0 + delta + gamma_ * r)) {
      throw pole_error("leroy4: Gamma argument hits a pole at r = " + std::to_string(r));
    }
  }
  const double log_z = zeta == 0.0 ? 0.0 : std::log(std::abs(zeta));
  auto term = [&](int r) -> detail::SignedLog {
    if (zeta == 0.0 && r > 0) return {-INFINITY, 0};
    const detail::SignedLog a = detail::rgamma_pow_log(1.0 + beta + alpha * r, 1.0);
    const detail::SignedLog b = detail::rgamma_pow_log(1.0 + delta + gamma_ * r, 1.0);
    const int zs = (zeta < 0.0 && r % 2 == 1) ? -1 : 1;
    return {a.log_abs + b.log_abs + r * log_z, a.sign * b.sign * zs};
  };
  if (zeta == 0.0) return {term(0).value(), 0.0, 1, Method::series};
  return detail::sum_terms(term, tol, max_terms);
}

/// E_{alpha,beta,gamma}(zeta) = sum (gamma)_r zeta^r / (r! Gamma(alpha r + beta)).
inline EvalResult prabhakar(double zeta, double alpha, double beta, double gamma_,
                            double tol = kDefaultSeriesTol, int max_terms = kDefaultMaxTerms) {
  detail::check_zeta(zeta, "prabhakar");
  return evaluate_exponential(GroundState::psi(alpha, beta, gamma_), zeta, tol, max_terms);
}

/// n-th derivative in closed form: (gamma)_n E_{alpha, beta + alpha n, gamma + n}.
inline EvalResult prabhakar_deriv(double zeta, double alpha, double beta, double gamma_, int n,
                                  double tol = kDefaultSeriesTol,
                                  int max_terms = kDefaultMaxTerms) {
  if (n < 0) throw domain_error("prabhakar_deriv: order must be nonnegative");
  const double factor = pochhammer(gamma_, n);
  if (factor == 0.0) return {0.0, 0.0, 0, Method::series};
  return scaled(prabhakar(zeta, alpha, beta + alpha * n, gamma_ + n, tol, max_terms), factor);
}

}  // namespace leroy_kit

#endif  // LEROY_KIT_LEROY_HPP
