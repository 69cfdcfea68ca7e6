#pragma once

#include <vector>

#include "schwartz/atom.hpp"
#include "schwartz/seminorm.hpp"

namespace schwartz {

/// Composite trapezoid rule for a complex integrand over the cube
/// [-half_width, half_width]^n with points_per_axis nodes per axis.
/// Partial sums are combined by pairwise reduction so the result does not
/// depend on evaluation order. Throws Error if points_per_axis < 16.
template <typename Integrand>
Complex trapezoid_cube(Integrand&& integrand, std::size_t dimension, Real half_width, int points_per_axis);

/// Direct quadrature of int f(x) exp(-2 pi i xi.x) dx.
Complex numeric_ft_oracle(const SchwartzFunction& f, const RealVector& xi, Real half_width, int points_per_axis);

/// Direct quadrature of int f(y) g(x - y) dy.
Complex numeric_conv_oracle(const SchwartzFunction& f, const SchwartzFunction& g, const RealVector& x,
                            Real half_width, int points_per_axis);

/// Brute-force max of |x^alpha d^beta f| over the uniform grid on the cube.
Real dense_sup_oracle(const SchwartzFunction& f, const SeminormIndex& idx, Real half_width, int points_per_axis);

namespace detail {

Complex pairwise_sum(std::vector<Complex> values);

}  // namespace detail

template <typename Integrand>
Complex trapezoid_cube(Integrand&& integrand, std::size_t dimension, Real half_width, int points_per_axis) {
  if (points_per_axis < 16) throw Error("trapezoid_cube: points_per_axis must be at least 16");
  const int m = points_per_axis;
  const Real h = 2.0 * half_width / (m - 1);
  const auto n = static_cast<Eigen::Index>(dimension);
  std::vector<int> counter(dimension, 0);
  RealVector x(n);
  std::vector<Complex> rows;
  Complex row = 0.0;
  while (true) {
    Real weight = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const int k = counter[static_cast<std::size_t>(j)];
      x[j] = -half_width + h * k;
      weight *= (k == 0 || k == m - 1) ? 0.5 * h : h;
    }
    row += weight * integrand(x);
    Eigen::Index j = n - 1;
    if (counter[static_cast<std::size_t>(j)] == m - 1) {
      rows.push_back(row);
      row = 0.0;
    }
    while (j >= 0 && ++counter[static_cast<std::size_t>(j)] == m) counter[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
  }
  return detail::pairwise_sum(std::move(rows));
}

}  // namespace schwartz
