#ifndef LEROY_KIT_QUADRATURE_HPP
#define LEROY_KIT_QUADRATURE_HPP

// Double-exponential quadrature: tanh-sinh on [0, split], exp-sinh on
// [split, inf) and sinh-sinh on the whole line. Each level halves the step
// of the previous one and only evaluates the new (odd) nodes.

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "leroy_kit/errors.hpp"
#include "leroy_kit/eval_result.hpp"

namespace leroy_kit {

struct QuadratureConfig {
  double rel_tol = 1e-11;
  double abs_tol = 1e-14;
  int max_level = 12;
  double split_point = 1.0;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
      throw domain_error("QuadratureConfig: tolerances must be positive");
    }
    if (max_level < 3) throw domain_error("QuadratureConfig: max_level must be at least 3");
    if (max_level > 16) throw domain_error("QuadratureConfig: max_level above 16 is not supported");
    if (!(split_point > 0.0) || !std::isfinite(split_point)) {
      throw domain_error("QuadratureConfig: split_point must be positive and finite");
    }
  }
};

namespace detail {

inline constexpr int kMaxLevels = 16;

enum class Rule { tanh_sinh, exp_sinh, sinh_sinh };

// One node of a mapped rule. For tanh-sinh the abscissa is stored as the
// fractions of the interval measured from each end, which keeps full
// relative accuracy next to both endpoints.
struct Node {
  double x;      // exp-sinh: e^u, sinh-sinh: sinh u, tanh-sinh: fraction from the left
  double x_alt;  // tanh-sinh only: fraction from the right
  double w;
  double t;
};

// Nodes added at a given level (t = k h with k odd for level > 0, all
// integer k at level 0), ordered outward, nonnegative t only.
inline Node make_node(Rule rule, double t) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  const double u = half_pi * std::sinh(t);
  const double du = half_pi * std::cosh(t);
  switch (rule) {
    case Rule::tanh_sinh: {
      const double sech = 1.0 / std::cosh(u);
      return {1.0 / (1.0 + std::exp(-2.0 * u)), 1.0 / (1.0 + std::exp(2.0 * u)),
              0.5 * sech * sech * du, t};
    }
    case Rule::exp_sinh: {
      const double e = std::exp(u);
      return {e, 0.0, e * du, t};
    }
    case Rule::sinh_sinh:
      return {std::sinh(u), 0.0, std::cosh(u) * du, t};
  }
  return {};
}

inline double t_max(Rule rule) { return rule == Rule::tanh_sinh ? 6.0 : 6.5; }

class NodeTable {
 public:
  explicit NodeTable(Rule rule) : rule_(rule) {}

  const std::vector<Node>& level(int k) const {
    std::call_once(flags_[k], [&] { build(k); });
    return levels_[k];
  }

 private:
  void build(int k) const {
    const double h = std::ldexp(1.0, -k);
    const double tm = t_max(rule_);
    std::vector<Node>& out = levels_[k];
    if (k == 0) {
      for (int i = 0; i <= static_cast<int>(tm); ++i) out.push_back(make_node(rule_, i));
    } else {
      for (long i = 1; i * h <= tm; i += 2) out.push_back(make_node(rule_, i * h));
    }
  }

  Rule rule_;
  mutable std::array<std::once_flag, kMaxLevels + 1> flags_;
  mutable std::array<std::vector<Node>, kMaxLevels + 1> levels_;
};

inline const NodeTable& node_table(Rule rule) {
  static const NodeTable tanh_sinh(Rule::tanh_sinh);
  static const NodeTable exp_sinh(Rule::exp_sinh);
  static const NodeTable sinh_sinh(Rule::sinh_sinh);
  switch (rule) {
    case Rule::tanh_sinh:
      return tanh_sinh;
    case Rule::exp_sinh:
      return exp_sinh;
    default:
      return sinh_sinh;
  }
}

// Sum of w f over the nodes of one level, both signs of t. Walks outward
// and stops once the contributions are negligible against the running L1
// norm. A non-finite value far out in the tail (|t| > 2) is taken as the
// end of the usable range.
template <class Eval>
double level_sum(const std::vector<Node>& nodes, Eval&& eval, double& l1, bool skip_center) {
  double sum = 0.0;
  for (int side : {1, -1}) {
    int small = 0;
    for (const Node& nd : nodes) {
      if (nd.t == 0.0 && (side < 0 || skip_center)) continue;
      const double term = eval(nd, side);
      if (!std::isfinite(term)) {
        if (nd.t > 2.0) break;
        throw convergence_error("quadrature: integrand is not finite at t = " +
                                std::to_string(side * nd.t));
      }
      sum += term;
      l1 += std::abs(term);
      if (std::abs(term) < 1e-19 * l1) {
        if (++small == 2) break;
      } else {
        small = 0;
      }
    }
  }
  return sum;
}

template <class Eval>
EvalResult run_levels(Rule rule, Eval&& eval, const QuadratureConfig& cfg, const char* what) {
  const NodeTable& table = node_table(rule);
  double l1 = 0.0;
  double prev = level_sum(table.level(0), eval, l1, false);
  for (int k = 1; k <= cfg.max_level; ++k) {
    const double h = std::ldexp(1.0, -k);
    const double cur = 0.5 * prev + h * level_sum(table.level(k), eval, l1, true);
    const double diff = std::abs(cur - prev);
    if (!std::isfinite(cur)) {
      throw convergence_error(std::string(what) + ": integral estimate is not finite");
    }
    if (k >= 3 && diff <= std::max(cfg.rel_tol * std::abs(cur), cfg.abs_tol)) {
      return {cur, diff, k, Method::quadrature};
    }
    prev = cur;
  }
  throw convergence_error(std::string(what) + ": no convergence by level " +
                          std::to_string(cfg.max_level));
}

// Integral over [a, b] (finite) by tanh-sinh.
template <class F>
EvalResult tanh_sinh(F&& f, double a, double b, const QuadratureConfig& cfg) {
  const double len = b - a;
  auto eval = [&](const Node& nd, int side) {
    // side > 0: near b, side < 0: near a.
    const double x = side > 0 ? b - len * nd.x_alt : a + len * nd.x_alt;
    return nd.w * f(x);
  };
  EvalResult r = run_levels(Rule::tanh_sinh, eval, cfg, "tanh_sinh");
  return scaled(r, len);
}

// Integral over [a, inf) by exp-sinh.
template <class F>
EvalResult exp_sinh(F&& f, double a, const QuadratureConfig& cfg) {
  auto eval = [&](const Node& nd, int side) {
    if (side > 0) return nd.w * f(a + nd.x);
    const double e = 1.0 / nd.x;  // e^{-u}
    return nd.w / (nd.x * nd.x) * f(a + e);
  };
  return run_levels(Rule::exp_sinh, eval, cfg, "exp_sinh");
}

inline EvalResult combine(const EvalResult& a, const EvalResult& b) {
  return {a.value + b.value, a.abs_err + b.abs_err, std::max(a.terms_or_level, b.terms_or_level),
          Method::quadrature};
}

}  // namespace detail

/// Integral of f over (0, inf).
///
/// Tanh-sinh on [0, split_point] absorbs integrable power singularities at
/// the origin; exp-sinh covers the tail. abs_err is the level-to-level
/// difference, summed over the two pieces.
template <class F>
EvalResult integrate_semi_inf(F&& f, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  const double s = cfg.split_point;
  const EvalResult left = detail::tanh_sinh(f, 0.0, s, cfg);
  const EvalResult right = detail::exp_sinh(f, s, cfg);
  return detail::combine(left, right);
}

/// Integral of f over [a, b].
template <class F>
EvalResult integrate_interval(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  if (!(a < b)) throw domain_error("integrate_interval: need a < b");
  return detail::tanh_sinh(f, a, b, cfg);
}

/// Integral of f over the real line by the sinh-sinh rule.
template <class F>
EvalResult integrate_real_line(F&& f, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  auto eval = [&](const detail::Node& nd, int side) { return nd.w * f(side * nd.x); };
  return detail::run_levels(detail::Rule::sinh_sinh, eval, cfg, "integrate_real_line");
}

/// Iterated integral of f(u, v) over (0, inf)^2, inner in v and outer in u.
///
/// abs_err is the outer estimate plus the integral over u of the inner
/// estimates. Failures name the axis that did not settle.
template <class F>
EvalResult integrate_semi_inf_2d(F&& f, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  std::map<double, EvalResult> inner;
  auto inner_at = [&](double u) -> const EvalResult& {
    auto it = inner.find(u);
    if (it != inner.end()) return it->second;
    try {
      return inner.emplace(u, integrate_semi_inf([&](double v) { return f(u, v); }, cfg))
          .first->second;
    } catch (const convergence_error& e) {
      throw convergence_error(std::string("integrate_semi_inf_2d: inner (v) axis: ") + e.what());
    }
  };
  EvalResult out;
  try {
    out = integrate_semi_inf([&](double u) { return inner_at(u).value; }, cfg);
  } catch (const convergence_error& e) {
    const std::string msg = e.what();
    if (msg.find("inner (v) axis") != std::string::npos) throw;
    throw convergence_error("integrate_semi_inf_2d: outer (u) axis: " + msg);
  }
  // Same nodes again, so this only reads back the cached inner estimates.
  QuadratureConfig loose = cfg;
  loose.rel_tol = 1e-2;
  loose.abs_tol = 1e-300;
  double inner_err = 0.0;
  try {
    inner_err = integrate_semi_inf([&](double u) { return inner_at(u).abs_err; }, loose).value;
  } catch (const convergence_error&) {
    inner_err = 0.0;
    for (const auto& [u, r] : inner) inner_err = std::max(inner_err, r.abs_err);
  }
  int inner_level = 0;
  for (const auto& [u, r] : inner) inner_level = std::max(inner_level, r.terms_or_level);
  out.abs_err += std::abs(inner_err);
  out.terms_or_level = std::max(out.terms_or_level, inner_level);
  return out;
}

}  // namespace leroy_kit

#endif  // LEROY_KIT_QUADRATURE_HPP
