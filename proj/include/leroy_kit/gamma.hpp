#ifndef LEROY_KIT_GAMMA_HPP
#define LEROY_KIT_GAMMA_HPP

// Real-argument gamma machinery and the ground states whose values at an
// index t supply the coefficients of every series in the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "leroy_kit/errors.hpp"

namespace leroy_kit {

namespace detail {

// Lanczos approximation, g = 7, nine coefficients.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline constexpr int kMaxFactorial = 170;

// n! for n = 0..170, accumulated in extended precision.
inline constexpr std::array<double, kMaxFactorial + 1> kFactorials = [] {
  std::array<double, kMaxFactorial + 1> out{};
  long double acc = 1.0L;
  out[0] = 1.0;
  for (int n = 1; n <= kMaxFactorial; ++n) {
    acc *= static_cast<long double>(n);
    out[n] = static_cast<double>(acc);
  }
  return out;
}();

inline bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && is_integer(x); }

// sin(pi x) with exact zeros at the integers.
inline double sin_pi(double x) {
  double y = x - 2.0 * std::round(0.5 * x);
  if (y > 0.5) {
    y = 1.0 - y;
  } else if (y < -0.5) {
    y = -1.0 - y;
  }
  return std::sin(std::numbers::pi * y);
}

// Logarithm of |v| plus its sign; sign == 0 encodes v == 0.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

inline SignedLog operator+(SignedLog a, SignedLog b) {
  if (a.sign == 0 || b.sign == 0) return {-INFINITY, 0};
  return {a.log_abs + b.log_abs, a.sign * b.sign};
}

inline SignedLog operator-(SignedLog a, SignedLog b) {
  return {a.log_abs - b.log_abs, a.sign * b.sign};
}

// ln Gamma(x) for x >= 0.5 by the Lanczos sum.
inline double lanczos_lgamma(double x) {
  const double z = x - 1.0;
  double a = kLanczosCoef[0];
  for (std::size_t k = 1; k < kLanczosCoef.size(); ++k) {
    a += kLanczosCoef[k] / (z + static_cast<double>(k));
  }
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

// ln|Gamma(x)| and sign for any real x that is not a pole.
inline SignedLog lgamma_signed(double x) {
  if (std::isnan(x)) throw domain_error("gamma: NaN argument");
  if (is_nonpositive_integer(x)) {
    throw pole_error("gamma: pole at nonpositive integer " + std::to_string(x));
  }
  if (is_integer(x) && x <= kMaxFactorial + 1) {
    return {std::log(kFactorials[static_cast<int>(x) - 1]), 1};
  }
  if (x >= 0.5) return {lanczos_lgamma(x), 1};
  if (x > 0.0) return {lanczos_lgamma(x + 1.0) - std::log(x), 1};
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x), with Gamma(1-x) > 0.
  const double s = sin_pi(x);
  return {std::log(std::numbers::pi) - std::log(std::abs(s)) - lanczos_lgamma(1.0 - x),
          s > 0 ? 1 : -1};
}

inline std::complex<double> lanczos_lgamma(std::complex<double> x) {
  const std::complex<double> z = x - 1.0;
  std::complex<double> a = kLanczosCoef[0];
  for (std::size_t k = 1; k < kLanczosCoef.size(); ++k) {
    a += kLanczosCoef[k] / (z + static_cast<double>(k));
  }
  const std::complex<double> t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

// A logarithm of Gamma(z). On Re z > 0 it is the analytic branch that is
// real on the positive axis; on Re z <= 0 only exp() of it is meaningful.
inline std::complex<double> lgamma_complex(std::complex<double> z) {
  if (z.real() >= 0.5) return lanczos_lgamma(z);
  if (z.real() > 0.0) return lanczos_lgamma(z + 1.0) - std::log(z);
  const std::complex<double> s = std::sin(std::numbers::pi * z);
  return std::log(std::numbers::pi) - std::log(s) - lanczos_lgamma(1.0 - z);
}

// Signed log of 1/Gamma(x)^mu.
inline SignedLog rgamma_pow_log(double x, double mu) {
  if (mu == 0.0) return {0.0, 1};
  if (is_nonpositive_integer(x)) {
    if (mu > 0.0) return {-INFINITY, 0};
    throw pole_error("rgamma_pow: Gamma pole at x = " + std::to_string(x) +
                     " raised to a negative power");
  }
  const SignedLog lg = lgamma_signed(x);
  int sign = 1;
  if (lg.sign < 0) {
    if (!is_integer(mu)) {
      throw pole_error("rgamma_pow: non-integer power of negative Gamma(" + std::to_string(x) +
                       ")");
    }
    sign = (std::fmod(std::abs(mu), 2.0) == 1.0) ? -1 : 1;
  }
  return {-mu * lg.log_abs, sign};
}

// Signed log of (gamma)_t = Gamma(gamma + t) / Gamma(gamma).
inline SignedLog pochhammer_log(double gamma, double t) {
  if (is_nonpositive_integer(gamma)) {
    throw pole_error("pochhammer: gamma = " + std::to_string(gamma) +
                     " is a nonpositive integer");
  }
  if (t == 0.0) return {0.0, 1};
  if (is_nonpositive_integer(gamma + t)) {
    throw pole_error("pochhammer: gamma + t = " + std::to_string(gamma + t) + " is a pole");
  }
  return lgamma_signed(gamma + t) - lgamma_signed(gamma);
}

}  // namespace detail

/// ln Gamma(x) for x > 0. Lanczos sum (g = 7, 9 terms) with a one-step
/// recurrence below 1/2 and exact factorials at the integers.
inline double ln_gamma(double x) {
  if (!(x > 0.0)) throw domain_error("ln_gamma: argument must be positive");
  return detail::lgamma_signed(x).log_abs;
}

/// 1/Gamma(x)^mu on the real line.
///
/// The reciprocal gamma is entire, so nonpositive integers give exactly 0
/// for mu > 0. A negative Gamma(x) raised to a non-integer power is not
/// real and raises pole_error, as does a pole with mu < 0.
inline double rgamma_pow(double x, double mu) {
  if (mu != 0.0 && detail::is_integer(x) && x >= 1.0 && x <= detail::kMaxFactorial + 1) {
    return std::pow(detail::kFactorials[static_cast<int>(x) - 1], -mu);
  }
  return detail::rgamma_pow_log(x, mu).value();
}

/// Generalised rising factorial (gamma)_t = Gamma(gamma + t) / Gamma(gamma)
/// for real, possibly negative or fractional, t.
inline double pochhammer(double gamma, double t) {
  if (detail::is_nonpositive_integer(gamma)) {
    throw pole_error("pochhammer: gamma = " + std::to_string(gamma) +
                     " is a nonpositive integer");
  }
  if (t == 0.0) return 1.0;
  if (detail::is_integer(t) && std::abs(t) <= 64.0) {
    // Literal product, exact to rounding.
    double p = 1.0;
    if (t > 0) {
      for (int k = 0; k < static_cast<int>(t); ++k) p *= gamma + k;
    } else {
      for (int k = 1; k <= static_cast<int>(-t); ++k) {
        if (gamma - k == 0.0) throw pole_error("pochhammer: gamma + t hits a pole");
        p /= gamma - k;
      }
    }
    return p;
  }
  return detail::pochhammer_log(gamma, t).value();
}

// ---------------------------------------------------------------------------
// Ground states

enum class GroundFamily {
  phi_pow,  // 1 / Gamma(beta + alpha t)^mu
  psi,      // Gamma(gamma + t) / (Gamma(gamma) Gamma(alpha t + beta))
  nu,       // (beta)_t / (t + alpha)^s
};

/// A parameterised function t -> g(t). Its values at the integers are the
/// coefficients of a power series; fractional t give fractional umbral
/// powers.
class GroundState {
 public:
  static GroundState phi_pow(double alpha, double beta, double mu) {
    if (!(alpha > 0.0)) throw domain_error("phi_pow ground state: alpha must be positive");
    return GroundState(GroundFamily::phi_pow, {alpha, beta, mu});
  }

  static GroundState psi(double alpha, double beta, double gamma) {
    if (!(alpha > 0.0)) throw domain_error("psi ground state: alpha must be positive");
    if (detail::is_nonpositive_integer(gamma)) {
      throw pole_error("psi ground state: Gamma(gamma) has a pole");
    }
    return GroundState(GroundFamily::psi, {alpha, beta, gamma});
  }

  static GroundState nu(double alpha, double beta, double s) {
    if (detail::is_nonpositive_integer(beta)) {
      throw pole_error("nu ground state: Gamma(beta) has a pole");
    }
    return GroundState(GroundFamily::nu, {alpha, beta, s});
  }

  GroundFamily family() const { return family_; }
  double alpha() const { return params_[0]; }
  double beta() const { return params_[1]; }
  // mu for phi_pow, gamma for psi, s for nu.
  double third() const { return params_[2]; }
  const std::array<double, 3>& params() const { return params_; }

  // Poles with t >= -kPoleWindow, ascending.
  const std::vector<double>& domain_poles() const { return poles_; }

  bool is_pole(double t) const {
    const double a = alpha(), b = beta(), p = third();
    switch (family_) {
      case GroundFamily::phi_pow:
        return p < 0.0 && detail::is_nonpositive_integer(b + a * t);
      case GroundFamily::psi:
        return detail::is_nonpositive_integer(p + t);
      case GroundFamily::nu:
        return (p > 0.0 && t + a == 0.0) || detail::is_nonpositive_integer(b + t);
    }
    return false;
  }

  static constexpr double kPoleWindow = 32.0;

 private:
  GroundState(GroundFamily f, std::array<double, 3> p) : family_(f), params_(p) {
    poles_ = compute_poles();
  }

  std::vector<double> compute_poles() const {
    std::vector<double> out;
    const double a = alpha(), b = beta(), p = third();
    auto gamma_poles = [&](double offset, double scale) {
      // Poles of Gamma(offset + scale t): t = (-k - offset) / scale.
      for (int k = 0;; ++k) {
        const double t = (-k - offset) / scale;
        if (t < -kPoleWindow) break;
        out.push_back(t);
      }
    };
    switch (family_) {
      case GroundFamily::phi_pow:
        if (p < 0.0) gamma_poles(b, a);
        break;
      case GroundFamily::psi:
        gamma_poles(p, 1.0);
        break;
      case GroundFamily::nu:
        gamma_poles(b, 1.0);
        if (p > 0.0 && -a >= -kPoleWindow) out.push_back(-a);
        break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  GroundFamily family_;
  std::array<double, 3> params_;
  std::vector<double> poles_;
};

namespace detail {

inline SignedLog ground_log(const GroundState& g, double t) {
  const double a = g.alpha(), b = g.beta(), p = g.third();
  if (g.is_pole(t)) {
    throw pole_error("ground state evaluated at its pole t = " + std::to_string(t));
  }
  switch (g.family()) {
    case GroundFamily::phi_pow:
      return rgamma_pow_log(b + a * t, p);
    case GroundFamily::psi:
      return pochhammer_log(p, t) + rgamma_pow_log(a * t + b, 1.0);
    case GroundFamily::nu: {
      SignedLog num = pochhammer_log(b, t);
      const double base = t + a;
      if (p == 0.0) return num;
      if (base == 0.0) return {-INFINITY, 0};  // p < 0: zero
      if (base < 0.0 && !is_integer(p)) {
        throw domain_error("nu ground state: non-real power of negative t + alpha");
      }
      const int sign = (base < 0.0 && std::fmod(std::abs(p), 2.0) == 1.0) ? -1 : 1;
      return {num.log_abs - p * std::log(std::abs(base)), num.sign * sign};
    }
  }
  return {};
}

// Log of g at complex t, analytic in t on the half plane used by the
// Mellin-Barnes contour.
inline std::complex<double> ground_log_complex(const GroundState& g, std::complex<double> t) {
  const double a = g.alpha(), b = g.beta(), p = g.third();
  switch (g.family()) {
    case GroundFamily::phi_pow:
      if (p == 0.0) return 0.0;
      return -p * lgamma_complex(b + a * t);
    case GroundFamily::psi:
      return lgamma_complex(p + t) - lgamma_complex(std::complex<double>(p, 0.0)) -
             lgamma_complex(a * t + b);
    case GroundFamily::nu:
      return lgamma_complex(b + t) - lgamma_complex(std::complex<double>(b, 0.0)) -
             p * std::log(t + a);
  }
  return 0.0;
}

}  // namespace detail

/// Value of the ground state at index t. Throws pole_error at domain_poles.
inline double ground_eval(const GroundState& g, double t) {
  return detail::ground_log(g, t).value();
}

}  // namespace leroy_kit

#endif  // LEROY_KIT_GAMMA_HPP
