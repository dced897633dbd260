#ifndef LIEINV_ERRORS_HPP
#define LIEINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lieinv {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Unsupported (family, rank) combination.
struct InvalidTypeError : Error {
  using Error::Error;
};

// Vectors/polynomials from incompatible spaces.
struct DimensionMismatchError : Error {
  using Error::Error;
};

// Substitution hit a variable with no binding.
struct UnboundVariableError : Error {
  using Error::Error;
};

// Requested an ad_epsilon preimage of something outside the image.
struct NotInImageError : Error {
  using Error::Error;
};

// Internal consistency failure: Jacobi violation, induction-order
// violation, non-integral structure constant.  Never user error.
struct DefectError : Error {
  using Error::Error;
};

// Bad job configuration (CLI level).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace lieinv

#endif
