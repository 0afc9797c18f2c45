#ifndef LEROY_KIT_EVAL_RESULT_HPP
#define LEROY_KIT_EVAL_RESULT_HPP

#include <string_view>

namespace leroy_kit {

enum class Method { series, quadrature };

constexpr std::string_view to_string(Method m) {
  return m == Method::series ? "series" : "quadrature";
}

// Value of a numerical evaluation together with its error estimate.
// terms_or_level is the number of series terms summed, or the deepest
// quadrature refinement level reached.
struct EvalResult {
  double value = 0.0;
  double abs_err = 0.0;
  int terms_or_level = 0;
  Method method = Method::series;
};

// Scales value and error by a constant factor.
inline EvalResult scaled(EvalResult r, double factor) {
  r.value *= factor;
  r.abs_err *= (factor < 0 ? -factor : factor);
  return r;
}

}  // namespace leroy_kit

#endif  // LEROY_KIT_EVAL_RESULT_HPP
