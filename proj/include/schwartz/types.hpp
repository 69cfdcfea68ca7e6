#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace schwartz {

using Real = double;
using Complex = std::complex<Real>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RealVector = Vector<Real>;
using ComplexVector = Vector<Complex>;
using RealMatrix = Matrix<Real>;

inline constexpr Real kPi = 3.14159265358979323846264338327950288;

/// Coefficients with absolute value at or below this are dropped.
inline constexpr Real kCoefficientDropTolerance = 1e-15;
/// Two (A, c) keys closer than this componentwise are merged.
inline constexpr Real kKeyMergeTolerance = 1e-12;
/// Symmetry tolerance for quadratic-form matrices.
inline constexpr Real kSymmetryTolerance = 1e-12;
/// Smallest admissible eigenvalue of a quadratic form.
inline constexpr Real kMinEigenvalue = 1e-3;
/// Largest admissible condition number of a quadratic form.
inline constexpr Real kMaxConditionNumber = 1e12;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Raised when a quadratic form is not symmetric positive-definite, or is
/// too degenerate to invert in double precision.
class DomainError : public Error {
 public:
  using Error::Error;
};

inline void require_dimension(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw DimensionError(std::string(what) + ": dimension mismatch (expected " +
                         std::to_string(expected) + ", got " + std::to_string(actual) + ")");
  }
}

}  // namespace schwartz
