#ifndef LEROY_KIT_ERRORS_HPP
#define LEROY_KIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leroy_kit {

// Base of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of the function (including branch cuts and
// non-real powers).
class domain_error : public error {
 public:
  using error::error;
};

// Argument hits a pole of a gamma factor or a power denominator.
class pole_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Series hit its term cap or quadrature failed to settle.
class convergence_error : public error {
 public:
  using error::error;
};

}  // namespace leroy_kit

#endif  // LEROY_KIT_ERRORS_HPP
