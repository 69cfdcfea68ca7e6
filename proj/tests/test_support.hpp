#pragma once

// Test-only numerical helpers, deliberately independent of the library's
// symbolic and quadrature code paths.

#include <cmath>
#include <functional>
#include <initializer_list>

#include "schwartz/types.hpp"

namespace schwartz::testing {

inline RealVector vec(std::initializer_list<Real> xs) {
  RealVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (Real x : xs) v[k++] = x;
  return v;
}

inline RealMatrix mat1(Real a) { return RealMatrix::Constant(1, 1, a); }

/// Composite Simpson rule on [a, b] with an even number of panels.
inline Complex simpson(const std::function<Complex(Real)>& g, Real a, Real b, int panels) {
  if (panels % 2) ++panels;
  const Real h = (b - a) / panels;
  Complex s = g(a) + g(b);
  for (int k = 1; k < panels; ++k) s += (k % 2 ? 4.0 : 2.0) * g(a + k * h);
  return s * h / 3.0;
}

/// Central difference of a scalar-valued map along one axis.
inline Complex central_difference(const std::function<Complex(const RealVector&)>& g, const RealVector& x,
                                  std::size_t axis, Real step) {
  RealVector up = x;
  RealVector down = x;
  up[static_cast<Eigen::Index>(axis)] += step;
  down[static_cast<Eigen::Index>(axis)] -= step;
  return (g(up) - g(down)) / (2.0 * step);
}

/// Second central difference along one axis.
inline Complex second_difference(const std::function<Complex(const RealVector&)>& g, const RealVector& x,
                                 std::size_t axis, Real step) {
  RealVector up = x;
  RealVector down = x;
  up[static_cast<Eigen::Index>(axis)] += step;
  down[static_cast<Eigen::Index>(axis)] -= step;
  return (g(up) - 2.0 * g(x) + g(down)) / (step * step);
}

}  // namespace schwartz::testing
