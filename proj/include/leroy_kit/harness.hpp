#ifndef LEROY_KIT_HARNESS_HPP
#define LEROY_KIT_HARNESS_HPP

// Registry of numerical identity checks. Each entry evaluates both sides of
// an identity over a small fixed grid and reports the worst discrepancy.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "leroy_kit/errors.hpp"
#include "leroy_kit/gamma.hpp"
#include "leroy_kit/lerch.hpp"
#include "leroy_kit/leroy.hpp"
#include "leroy_kit/quadrature.hpp"
#include "leroy_kit/transforms.hpp"

namespace leroy_kit {

class unknown_identity : public error {
 public:
  using error::error;
};

enum class IdentityStatus { pass, fail, unverifiable };

inline std::string to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::pass:
      return "Pass";
    case IdentityStatus::fail:
      return "Fail";
    case IdentityStatus::unverifiable:
      return "Unverifiable";
  }
  return "";
}

// How max_abs_err is measured for an identity.
enum class ErrorKind {
  absolute,        // |lhs - rhs|
  relative,        // |lhs - rhs| / |rhs|
  min_term_ratio,  // |resummed - truncated| / smallest term
};

inline std::string to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::absolute:
      return "absolute";
    case ErrorKind::relative:
      return "relative";
    case ErrorKind::min_term_ratio:
      return "min_term_ratio";
  }
  return "";
}

enum class TolProfile { default_profile, strict };

/// One parameter point, as ordered name/value pairs.
struct GridPoint {
  std::vector<std::pair<std::string, double>> params;

  GridPoint() = default;
  GridPoint(std::initializer_list<std::pair<std::string, double>> p) : params(p) {}

  double at(const std::string& name) const {
    for (const auto& [k, v] : params) {
      if (k == name) return v;
    }
    throw domain_error("grid point has no parameter '" + name + "'");
  }
  int int_at(const std::string& name) const { return static_cast<int>(std::lround(at(name))); }
};

struct IdentityReport {
  std::string identity_id;
  std::string paper_anchor;
  std::vector<GridPoint> grid;
  double max_abs_err = 0.0;
  double tolerance = 0.0;
  IdentityStatus status = IdentityStatus::pass;
  std::string oracle;
  bool printed_form = false;   // a literal printed formula expected to disagree
  ErrorKind error_kind = ErrorKind::absolute;
  std::string error_note;      // first evaluation failure on the grid, if any
};

struct IdentityOverrides {
  std::optional<std::vector<GridPoint>> grid;
  std::optional<double> tolerance;
};

struct IdentityDef {
  std::string id;
  std::string anchor;
  std::string oracle;
  ErrorKind kind = ErrorKind::relative;
  double tolerance = 1e-11;
  bool printed_form = false;
  bool unverifiable = false;
  std::vector<GridPoint> grid;
  std::function<double(const GridPoint&)> residual;
};

namespace detail {

inline double rel_diff(double a, double b) {
  const double d = std::abs(a - b);
  return b == 0.0 ? d : d / std::abs(b);
}

inline double abs_diff(double a, double b) { return std::abs(a - b); }

// n-th derivative by central differences at steps h, h/2, h/4 with two
// rounds of Richardson extrapolation (error O(h^6)).
template <class F>
double richardson_derivative(F&& f, double x, int n, double h) {
  auto central = [&](double step) {
    // sum_k (-1)^k C(n,k) f(x + (n/2 - k) step) / step^n
    double sum = 0.0;
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
      sum += ((k % 2 == 0) ? 1.0 : -1.0) * binom * f(x + (0.5 * n - k) * step);
      binom = binom * (n - k) / (k + 1);
    }
    return sum / std::pow(step, n);
  };
  const double d0 = central(h), d1 = central(0.5 * h), d2 = central(0.25 * h);
  const double r1 = (4.0 * d1 - d0) / 3.0;
  const double r2 = (4.0 * d2 - d1) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

// Trapezoid rule for int_0^inf g(t) dt in the variable t = e^y on a dense
// fixed lattice. Independent of the adaptive rules; for integrands with
// power behaviour at 0 and exponential decay.
template <class G>
double dense_exp_trapezoid(G&& g, double y_lo = -45.0, double y_hi = 7.0, double h = 1.0 / 64) {
  const int n = static_cast<int>(std::lround((y_hi - y_lo) / h));
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = std::exp(y_lo + i * h);
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    sum += w * g(t) * t;
  }
  return sum * h;
}

// e^z E_1(z) for z > 0: continued fraction above 1, Ei below.
inline double scaled_e1(double z) {
  if (z <= 1.0) return -std::exp(z) * std::expint(-z);
  // Modified Lentz on E_1(z) e^z = 1 / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...))).
  constexpr double tiny = 1e-300;
  double b = z + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h;
}

inline constexpr double kCatalan = 0.915965594177219015054603514932;

inline std::vector<GridPoint> lattice(const std::string& a, std::initializer_list<double> as,
                                      const std::string& b, std::initializer_list<double> bs) {
  std::vector<GridPoint> out;
  for (double x : as) {
    for (double y : bs) out.push_back({{a, x}, {b, y}});
  }
  return out;
}

inline std::vector<IdentityDef> build_registry() {
  std::vector<IdentityDef> reg;
  constexpr double pi = std::numbers::pi;

  {
    IdentityDef d;
    d.id = "I1-leroy-exp-reduction";
    d.anchor = "Le Roy series L(zeta;mu) at mu = 1 reduces to exp(zeta)";
    d.oracle = "std::exp";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-12;
    for (int i = -10; i <= 10; ++i) d.grid.push_back({{"zeta", static_cast<double>(i)}});
    d.residual = [](const GridPoint& p) {
      const double z = p.at("zeta");
      return rel_diff(leroy(z, 1.0).value, std::exp(z));
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I2-leroy-deriv";
    d.anchor = "n-th derivative of L(zeta;mu) equals L(zeta;1,n,mu)";
    d.oracle = "Richardson-extrapolated central differences of leroy";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-5;
    for (double n : {1.0, 2.0})
      for (double mu : {0.5, 2.0, 3.0})
        for (double z : {-0.8, -0.3, 0.3, 0.8}) d.grid.push_back({{"n", n}, {"mu", mu}, {"zeta", z}});
    d.residual = [](const GridPoint& p) {
      const double mu = p.at("mu"), z = p.at("zeta");
      const int n = p.int_at("n");
      const double fd =
          richardson_derivative([&](double x) { return leroy(x, mu).value; }, z, n, 0.05);
      return rel_diff(leroy_deriv(z, mu, n).value, fd);
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I3-prabhakar-deriv";
    d.anchor = "n-th derivative of E_{alpha,beta,gamma} equals (gamma)_n E_{alpha,beta+alpha n,gamma+n}";
    d.oracle = "Richardson-extrapolated central differences of prabhakar";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-5;
    for (auto [a, b, g] : {std::tuple{0.7, 1.3, 2.0}, std::tuple{1.5, 1.0, 0.5}})
      for (double n : {1.0, 2.0})
        for (double z : {-0.8, -0.4, 0.4, 0.8})
          d.grid.push_back({{"alpha", a}, {"beta", b}, {"gamma", g}, {"n", n}, {"zeta", z}});
    d.residual = [](const GridPoint& p) {
      const double a = p.at("alpha"), b = p.at("beta"), g = p.at("gamma"), z = p.at("zeta");
      const int n = p.int_at("n");
      const double fd = richardson_derivative(
          [&](double x) { return prabhakar(x, a, b, g).value; }, z, n, 0.05);
      return rel_diff(prabhakar_deriv(z, a, b, g, n).value, fd);
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I4-borel-leroy";
    d.anchor = "Borel transform of L(zeta;mu) equals L(zeta;mu-1)";
    d.oracle = "series value of leroy(zeta, mu - 1)";
    d.kind = ErrorKind::absolute;
    d.tolerance = 1e-8;
    d.grid = lattice("zeta", {-1.0, -0.5, 0.0, 0.5}, "mu", {1.5, 2.0, 3.0});
    d.residual = [](const GridPoint& p) {
      const double z = p.at("zeta"), mu = p.at("mu");
      return abs_diff(borel_transform_leroy(z, mu).value, leroy(z, mu - 1.0).value);
    };
    reg.push_back(std::move(d));
  }
  auto borel_leroy_grid = [] {
    std::vector<GridPoint> g;
    for (double z : {-0.5, 0.5, 1.0})
      for (auto [a, b, mu] : {std::tuple{0.5, 1.0, 2.0}, std::tuple{1.0, 0.0, 2.0},
                              std::tuple{1.0, 0.5, 3.0}})
        g.push_back({{"zeta", z}, {"alpha", a}, {"beta", b}, {"mu", mu}});
    return g;
  };
  {
    IdentityDef d;
    d.id = "I5-borel-leroy-gen-derived";
    d.anchor = "Borel-Le Roy transform of L(zeta;alpha,beta,mu) equals L(zeta;alpha,beta,mu-1)";
    d.oracle = "series value of leroy_gen(zeta; alpha, beta, mu - 1), weight t^beta, argument zeta t^alpha";
    d.kind = ErrorKind::absolute;
    d.tolerance = 1e-7;
    d.grid = borel_leroy_grid();
    d.residual = [](const GridPoint& p) {
      const LeRoyParams q{p.at("alpha"), p.at("beta"), p.at("mu")};
      const double z = p.at("zeta");
      return abs_diff(borel_leroy_transform_gen(z, q).value,
                      leroy_gen(z, {q.alpha, q.beta, q.mu - 1.0}).value);
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I5b-borel-leroy-gen-printed";
    d.anchor = "Borel-Le Roy transform, printed weight t^mu and argument zeta t^beta";
    d.oracle = "series value of leroy_gen(zeta; alpha, beta, mu - 1)";
    d.kind = ErrorKind::absolute;
    d.tolerance = 1e-7;
    d.printed_form = true;
    d.grid = borel_leroy_grid();
    d.residual = [](const GridPoint& p) {
      const LeRoyParams q{p.at("alpha"), p.at("beta"), p.at("mu")};
      const double z = p.at("zeta");
      return abs_diff(borel_leroy_transform_gen_printed(z, q).value,
                      leroy_gen(z, {q.alpha, q.beta, q.mu - 1.0}).value);
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I6-kolokoltsov";
    d.anchor = "Gaussian integral of the Kolokoltsov function L(-x^2;1/2) equals pi^{3/4}";
    d.oracle = "pi^{3/4}";
    d.kind = ErrorKind::absolute;
    d.tolerance = 1e-7;
    d.grid = {{{"mu", 0.5}}};
    d.residual = [pi](const GridPoint& p) {
      if (p.at("mu") != 0.5) throw domain_error("I6-kolokoltsov: only mu = 1/2 is registered");
      return abs_diff(kolokoltsov_integral().value, std::pow(pi, 0.75));
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I7-prabhakar-gauss";
    d.anchor = "Gaussian integral of E_{alpha,beta,gamma}(-x^2) equals sqrt(pi)(gamma)_{-1/2}/Gamma(beta-alpha/2)";
    d.oracle = "closed form via pochhammer and rgamma_pow";
    d.kind = ErrorKind::absolute;
    d.tolerance = 1e-7;
    for (auto [a, b, g] : {std::tuple{1.0, 2.0, 1.0}, std::tuple{0.5, 1.0, 1.0},
                           std::tuple{1.0, 1.5, 2.0}, std::tuple{0.8, 1.2, 1.5}})
      d.grid.push_back({{"alpha", a}, {"beta", b}, {"gamma", g}});
    d.residual = [](const GridPoint& p) {
      const double a = p.at("alpha"), b = p.at("beta"), g = p.at("gamma");
      return abs_diff(prabhakar_gauss_integral(a, b, g).value, prabhakar_gauss_closed_form(a, b, g));
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I8-lerch-series-integral";
    d.anchor = "Lerch transcendent: series against Gamma-integral representation";
    d.oracle = "series summation of Phi(zeta;alpha,s)";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-9;
    for (double z : {-0.8, -0.5, 0.5, 0.8})
      for (auto [a, s] : {std::pair{0.5, 0.5}, std::pair{1.0, 1.0}, std::pair{2.0, 2.0},
                          std::pair{1.0, 3.0}, std::pair{0.5, 2.0}, std::pair{2.0, 0.5}})
        d.grid.push_back({{"zeta", z}, {"alpha", a}, {"s", s}});
    d.residual = [](const GridPoint& p) {
      const LerchParams q{p.at("alpha"), p.at("s")};
      const double z = p.at("zeta");
      return rel_diff(lerch(z, q, EvalMethod::integral).value,
                      lerch(z, q, EvalMethod::series).value);
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I9-lerch-continuation";
    d.anchor = "Lerch transcendent continued past |zeta| = 1 by its Gamma-integral representation";
    d.oracle = "dense fixed-step trapezoid in t = e^y of the same integrand";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-8;
    for (auto [z, a, s] : {std::tuple{-5.0, 1.0, 2.0}, std::tuple{-2.0, 0.5, 1.0},
                           std::tuple{-10.0, 2.0, 3.0}, std::tuple{-1.5, 1.0, 0.5},
                           std::tuple{-1.0, 1.0, 1.0}})
      d.grid.push_back({{"zeta", z}, {"alpha", a}, {"s", s}});
    d.residual = [](const GridPoint& p) {
      const double z = p.at("zeta"), a = p.at("alpha"), s = p.at("s");
      const double ref = dense_exp_trapezoid([&](double t) {
                           return std::pow(t, s - 1.0) * std::exp(-a * t) / (1.0 - z * std::exp(-t));
                         }) /
                         std::tgamma(s);
      return rel_diff(lerch(z, {a, s}, EvalMethod::integral).value, ref);
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I10-lerch-deriv";
    d.anchor = "n-th derivative of Phi(zeta;alpha,s) equals (1)_n Phi(zeta;alpha+n,1+n,s)";
    d.oracle = "Richardson-extrapolated central differences of lerch";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-5;
    for (double z : {-0.4, 0.4, 0.7})
      for (double a : {0.5, 1.0})
        for (double n : {1.0, 2.0}) d.grid.push_back({{"zeta", z}, {"alpha", a}, {"s", 2.0}, {"n", n}});
    d.residual = [](const GridPoint& p) {
      const double z = p.at("zeta"), a = p.at("alpha"), s = p.at("s");
      const int n = p.int_at("n");
      const double fd = richardson_derivative(
          [&](double x) { return lerch(x, {a, s}, EvalMethod::series).value; }, z, n, 0.05);
      return rel_diff(lerch_deriv(z, a, s, n).value, fd);
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I11-lerch-gen-deriv";
    d.anchor = "n-th derivative of Phi(zeta;alpha,beta,s) equals (beta)_n Phi(zeta;alpha+n,beta+n,s)";
    d.oracle = "Richardson-extrapolated central differences of lerch_gen";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-5;
    for (double z : {-0.3, 0.2, 0.6})
      for (auto [a, b, s] : {std::tuple{0.7, 1.5, 1.0}, std::tuple{1.2, 2.5, 2.0}})
        for (double n : {1.0, 2.0})
          d.grid.push_back({{"zeta", z}, {"alpha", a}, {"beta", b}, {"s", s}, {"n", n}});
    d.residual = [](const GridPoint& p) {
      const double z = p.at("zeta"), a = p.at("alpha"), b = p.at("beta"), s = p.at("s");
      const int n = p.int_at("n");
      const double fd = richardson_derivative(
          [&](double x) { return lerch_gen(x, a, b, s).value; }, z, n, 0.05);
      return rel_diff(lerch_gen_deriv(z, a, b, s, n).value, fd);
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I12-polylog-addition";
    d.anchor = "Li_s(z1+z2)/(z1+z2) regrouped as sum_r z1^r Phi(z2;1+r,1+r,s)";
    d.oracle = "polylog at z1 + z2";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-8;
    for (auto [z1, z2] : {std::pair{0.2, 0.3}, std::pair{0.1, 0.5}, std::pair{-0.2, 0.4},
                          std::pair{0.3, -0.5}})
      for (double s : {1.0, 2.0}) d.grid.push_back({{"zeta1", z1}, {"zeta2", z2}, {"s", s}});
    d.residual = [](const GridPoint& p) {
      const double z1 = p.at("zeta1"), z2 = p.at("zeta2"), s = p.at("s");
      CompensatedSum sum;
      int small = 0;
      for (int r = 0; r < 2000 && small < 3; ++r) {
        const double t = std::pow(z1, r) * lerch_gen(z2, 1.0 + r, 1.0 + r, s).value;
        sum.add(t);
        small = std::abs(t) < 1e-16 * std::abs(sum.value()) ? small + 1 : 0;
      }
      const double z = z1 + z2;
      return rel_diff(sum.value(), polylog(s, z).value / z);
    };
    reg.push_back(std::move(d));
  }
  auto chi_grid = [] {
    std::vector<GridPoint> g;
    for (double part : {0.0, 1.0})
      for (double z : {0.2, 0.3, 0.5})
        for (double n : {1.0, 2.0}) g.push_back({{"part", part}, {"s", 2.0}, {"zeta", z}, {"n", n}});
    return g;
  };
  auto chi_fd = [](const GridPoint& p) {
    const double s = p.at("s"), z = p.at("zeta");
    const int n = p.int_at("n");
    if (p.at("part") == 0.0) {
      return richardson_derivative([&](double x) { return chi_c(s, x).value; }, z, 2 * n, 0.05);
    }
    return richardson_derivative([&](double x) { return chi_s_part(s, x).value; }, z, 2 * n, 0.05);
  };
  {
    IdentityDef d;
    d.id = "I13-printed-chi-deriv";
    d.anchor = "2n-th derivatives of c_s and s_s, printed Pochhammer coefficients (2n+1)_{2r}, (2n+1)_{2r+1}";
    d.oracle = "Richardson-extrapolated central differences of chi_c / chi_s_part (part 0 = c_s, 1 = s_s); printed series optimally truncated";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-5;
    d.printed_form = true;
    d.grid = chi_grid();
    d.residual = [chi_fd](const GridPoint& p) {
      const double s = p.at("s"), z = p.at("zeta");
      const int n = p.int_at("n");
      const double v = p.at("part") == 0.0 ? chi_c_deriv2n_printed(s, z, n).value
                                           : chi_s_deriv2n_printed(s, z, n).value;
      return rel_diff(v, chi_fd(p));
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I13b-derived-chi-deriv";
    d.anchor = "2n-th derivatives of c_s and s_s, term-wise coefficients (2r+1)_{2n}, (2r+2)_{2n}";
    d.oracle = "Richardson-extrapolated central differences of chi_c / chi_s_part (part 0 = c_s, 1 = s_s)";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-5;
    d.grid = chi_grid();
    d.residual = [chi_fd](const GridPoint& p) {
      const double s = p.at("s"), z = p.at("zeta");
      const int n = p.int_at("n");
      const double v = p.at("part") == 0.0 ? chi_c_deriv2n(s, z, n).value
                                           : chi_s_deriv2n(s, z, n).value;
      return rel_diff(v, chi_fd(p));
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I14-gauss-transform";
    d.anchor = "Gauss transform of g_s(2 x zeta) equals sqrt(pi) Li_s(zeta^2)/zeta^2";
    d.oracle = "sqrt(pi) polylog(s, zeta^2) / zeta^2";
    d.kind = ErrorKind::absolute;
    d.tolerance = 1e-8;
    d.grid = lattice("s", {1.0, 2.0}, "zeta", {0.3, 0.5, 0.7});
    d.residual = [pi](const GridPoint& p) {
      const double s = p.at("s"), z = p.at("zeta");
      const double lhs =
          gauss_transform([&](double y) { return polylog_half(s, y).value; }, z).value;
      return abs_diff(lhs, std::sqrt(pi) * polylog(s, z * z).value / (z * z));
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I15-ti-deriv";
    d.anchor = "n-th derivative of 2^s Ti(zeta)/zeta as a Hermite-type finite sum of Phi(-zeta^2;n-r+1/2,1+n-r,s)";
    d.oracle = "Richardson-extrapolated central differences of 2^s ti_gen(zeta,s)/zeta";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-5;
    for (double z : {-0.6, 0.3, 0.5})
      for (double s : {1.0, 2.0})
        for (double n : {1.0, 2.0, 3.0}) d.grid.push_back({{"zeta", z}, {"s", s}, {"n", n}});
    d.residual = [](const GridPoint& p) {
      const double z = p.at("zeta"), s = p.at("s");
      const int n = p.int_at("n");
      const double fd = richardson_derivative(
          [&](double x) { return std::pow(2.0, s) * ti_gen(x, s).value / x; }, z, n, 0.05);
      return rel_diff(ti_gen_deriv(z, s, n).value, fd);
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I16-chi-decomposition";
    d.anchor = "c_s + s_s = Phi(zeta;1,s) and chi_s = zeta c_s";
    d.oracle = "lerch(zeta;1,s) and legendre_chi; worst of the two relations";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-12;
    d.grid = lattice("zeta", {-0.8, -0.4, 0.4, 0.8}, "s", {2.0, 3.0});
    d.residual = [](const GridPoint& p) {
      const double z = p.at("zeta"), s = p.at("s");
      const double c = chi_c(s, z).value, sp = chi_s_part(s, z).value;
      return std::max(rel_diff(c + sp, lerch(z, {1.0, s}).value),
                      rel_diff(z * c, legendre_chi(s, z).value));
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I17-polygamma-dual-path";
    d.anchor = "psi^(m)(alpha) = (-1)^{m+1} m! zeta(m+1,alpha) against its Laplace-integral form";
    d.oracle = "quadrature of (-1)^{m+1} int t^m e^{-alpha t}/(1-e^{-t}) dt";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-9;
    d.grid = lattice("m", {1.0, 2.0, 3.0}, "alpha", {0.5, 1.0, 3.0});
    d.residual = [](const GridPoint& p) {
      const int m = p.int_at("m");
      const double a = p.at("alpha");
      return rel_diff(polygamma(m, a).value, polygamma_integral(m, a).value);
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I18-polygamma2-reduction";
    d.anchor = "two-variable polygamma (-1)^{m+1} m! Phi(zeta;alpha,m+1), reducing to psi^(m) at zeta = 1";
    d.oracle = "defining integral (-1)^{m+1} int t^m e^{-alpha t}/(1-zeta e^{-t}) dt; polygamma at zeta = 1";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-9;
    for (double m : {1.0, 2.0, 3.0})
      for (double z : {-0.5, 0.5, 1.0}) d.grid.push_back({{"m", m}, {"alpha", 0.7}, {"zeta", z}});
    d.residual = [](const GridPoint& p) {
      const int m = p.int_at("m");
      const double a = p.at("alpha"), z = p.at("zeta");
      const double v = polygamma2(m, a, z).value;
      double e = rel_diff(v, polygamma2_integral(m, a, z).value);
      if (z == 1.0) e = std::max(e, rel_diff(v, polygamma(m, a).value));
      return e;
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I18b-polygamma2-printed-sign";
    d.anchor = "two-variable polygamma as Gamma(m+1) Phi(zeta;alpha,m+1), printed without (-1)^{m+1}";
    d.oracle = "defining integral (-1)^{m+1} int t^m e^{-alpha t}/(1-zeta e^{-t}) dt";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-9;
    d.printed_form = true;
    d.grid = lattice("m", {1.0, 2.0, 3.0}, "zeta", {0.0, 0.5});
    d.residual = [](const GridPoint& p) {
      const int m = p.int_at("m");
      const double z = p.at("zeta");
      return rel_diff(polygamma2_printed(m, 1.0, z).value, polygamma2_integral(m, 1.0, z).value);
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I19-euler-ode-residual";
    d.anchor = "y = x d1bar(x) solves x^2 y' + y = x";
    d.oracle = "ODE residual with central-difference y'";
    d.kind = ErrorKind::absolute;
    d.tolerance = 1e-7;
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0}) d.grid.push_back({{"x", x}});
    d.residual = [](const GridPoint& p) { return euler_ode_residual(p.at("x")); };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I20-euler-d2-collapse";
    d.anchor = "d2bar(x;alpha,beta) collapses to d2bar(x) at (1,0) and to Gamma(1+beta)^2 at x = 0";
    d.oracle = "d2bar(x) = int e^{-u} d1bar(u x) du with d1bar(y) = e^{1/y} E1(1/y)/y on a dense trapezoid; Gamma(1+beta)^2";
    d.kind = ErrorKind::absolute;
    d.tolerance = 1e-8;
    for (auto [x, a, b] : {std::tuple{0.25, 1.0, 0.0}, std::tuple{0.5, 1.0, 0.0},
                           std::tuple{1.0, 1.0, 0.0}, std::tuple{2.0, 1.0, 0.0},
                           std::tuple{0.0, 2.0, 0.5}, std::tuple{0.0, 0.5, 1.0}})
      d.grid.push_back({{"x", x}, {"alpha", a}, {"beta", b}});
    d.residual = [](const GridPoint& p) {
      const double x = p.at("x"), a = p.at("alpha"), b = p.at("beta");
      const double v = euler_d2_bar_gen(x, a, b).value;
      if (x == 0.0) return abs_diff(v, std::pow(std::tgamma(1.0 + b), 2));
      if (a != 1.0 || b != 0.0) {
        throw domain_error("I20-euler-d2-collapse: x > 0 requires alpha = 1, beta = 0");
      }
      const double ref = dense_exp_trapezoid([&](double u) {
        const double y = u * x;
        return std::exp(-u) * scaled_e1(1.0 / y) / y;
      });
      return std::max(abs_diff(v, ref), abs_diff(euler_d2_bar(x).value, ref));
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I21-euler-resummation";
    d.anchor = "integral resummation of the divergent Euler series d1 and d2 against optimal truncation";
    d.oracle = "partial sum up to the smallest term; error measured in units of that term";
    d.kind = ErrorKind::min_term_ratio;
    d.tolerance = 3.0;
    for (double x : {0.05, 0.1, 0.2}) d.grid.push_back({{"series", 1.0}, {"x", x}});
    for (double x : {0.01, 0.02, 0.05}) d.grid.push_back({{"series", 2.0}, {"x", x}});
    d.residual = [](const GridPoint& p) {
      const double x = p.at("x");
      const bool first = p.at("series") == 1.0;
      const OptimalTruncation o =
          optimal_truncation(first ? DivergentSeriesSpec::d1() : DivergentSeriesSpec::d2(), x);
      const double resummed = first ? euler_d1_bar(x).value : euler_d2_bar(x).value;
      return std::abs(resummed - o.value) / o.min_term;
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I22-constants";
    d.anchor = "special values chi_2(1) = pi^2/8, psi^(1)(1) = pi^2/6, Ti_2(1) = Catalan, zeta(3,1) = Apery";
    d.oracle = "closed forms and literal constants";
    d.kind = ErrorKind::absolute;
    d.tolerance = 1e-10;
    for (double c : {1.0, 2.0, 3.0, 4.0}) d.grid.push_back({{"constant", c}});
    d.residual = [pi](const GridPoint& p) {
      switch (p.int_at("constant")) {
        case 1:
          return abs_diff(legendre_chi(2.0, 1.0).value, pi * pi / 8.0);
        case 2:
          return abs_diff(polygamma(1, 1.0).value, pi * pi / 6.0);
        case 3:
          return abs_diff(ti_gen(1.0, 2.0).value, kCatalan);
        case 4:
          return abs_diff(hurwitz_zeta(3.0, 1.0).value, 1.2020569031595942854);
        default:
          throw domain_error("I22-constants: constant index must be 1..4");
      }
    };
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I23-multidim-borel-leroy";
    d.anchor = "multidimensional Borel-Le Roy inversion of the four-parameter series";
    d.oracle = "none: the printed inversion formula has no consistent reading (missing weight, ambiguous argument)";
    d.kind = ErrorKind::absolute;
    d.tolerance = 0.0;
    d.unverifiable = true;
    d.grid = {{{"x", 0.5}, {"alpha", 1.0}, {"beta", 0.0}, {"gamma", 1.0}, {"delta", 0.0}}};
    reg.push_back(std::move(d));
  }
  {
    IdentityDef d;
    d.id = "I24-leroy4-reduction";
    d.anchor = "four-parameter series at alpha = gamma = 1, beta = delta = 0 is L(x;2)";
    d.oracle = "leroy(x, 2)";
    d.kind = ErrorKind::relative;
    d.tolerance = 1e-11;
    for (double x : {-2.0, -0.5, 0.5, 1.0, 3.0}) d.grid.push_back({{"x", x}});
    d.residual = [](const GridPoint& p) {
      const double x = p.at("x");
      return rel_diff(leroy4(x, 1.0, 0.0, 1.0, 0.0).value, leroy(x, 2.0).value);
    };
    reg.push_back(std::move(d));
  }
  return reg;
}

inline const std::vector<IdentityDef>& registry() {
  static const std::vector<IdentityDef> reg = build_registry();
  return reg;
}

inline double profile_factor(TolProfile p) { return p == TolProfile::strict ? 0.01 : 1.0; }

inline IdentityReport run_def(const IdentityDef& def, const IdentityOverrides& ov,
                              TolProfile profile) {
  IdentityReport rep;
  rep.identity_id = def.id;
  rep.paper_anchor = def.anchor;
  rep.oracle = def.oracle;
  rep.printed_form = def.printed_form;
  rep.error_kind = def.kind;
  rep.grid = ov.grid ? *ov.grid : def.grid;
  if (rep.grid.empty()) throw domain_error(def.id + ": empty grid");
  rep.tolerance = ov.tolerance ? *ov.tolerance : def.tolerance * profile_factor(profile);
  if (def.unverifiable) {
    rep.status = IdentityStatus::unverifiable;
    rep.max_abs_err = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  double worst = 0.0;
  for (const GridPoint& p : rep.grid) {
    double e;
    try {
      e = def.residual(p);
    } catch (const error& ex) {
      e = std::numeric_limits<double>::infinity();
      if (rep.error_note.empty()) rep.error_note = ex.what();
    }
    if (!(e <= worst)) worst = std::isnan(e) ? std::numeric_limits<double>::infinity() : e;
  }
  rep.max_abs_err = worst;
  rep.status = worst <= rep.tolerance ? IdentityStatus::pass : IdentityStatus::fail;
  return rep;
}

}  // namespace detail

/// Identifiers of every registered identity, in registry order.
inline std::vector<std::string> identity_ids() {
  std::vector<std::string> out;
  for (const auto& d : detail::registry()) out.push_back(d.id);
  return out;
}

/// Runs one identity. Overrides replace the grid and/or the tolerance; an
/// empty override grid is rejected.
inline IdentityReport run_identity(const std::string& id, const IdentityOverrides& overrides = {},
                                   TolProfile profile = TolProfile::default_profile) {
  if (overrides.grid && overrides.grid->empty()) {
    throw domain_error("run_identity: override grid is empty");
  }
  if (overrides.tolerance && !(*overrides.tolerance >= 0.0)) {
    throw domain_error("run_identity: override tolerance must be nonnegative");
  }
  for (const auto& d : detail::registry()) {
    if (d.id == id) return detail::run_def(d, overrides, profile);
  }
  throw unknown_identity("unknown identity '" + id + "'");
}

/// Runs the whole registry in order. Strict tightens every tolerance 100x.
inline std::vector<IdentityReport> run_all(TolProfile profile = TolProfile::default_profile) {
  std::vector<IdentityReport> out;
  for (const auto& d : detail::registry()) out.push_back(detail::run_def(d, {}, profile));
  return out;
}

/// Whether a report counts against the verification gate: a Fail on an
/// identity that is neither a printed form nor unverifiable.
inline bool unexpected_failure(const IdentityReport& r) {
  return r.status == IdentityStatus::fail && !r.printed_form;
}

}  // namespace leroy_kit

#endif  // LEROY_KIT_HARNESS_HPP
