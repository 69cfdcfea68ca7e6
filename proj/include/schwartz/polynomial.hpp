#pragma once

#include <map>

#include "schwartz/multi_index.hpp"
#include "schwartz/types.hpp"

namespace schwartz {

/// Finite complex-coefficient sum of monomials x^alpha in a fixed dimension.
/// Coefficients at or below kCoefficientDropTolerance are never stored.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Complex>;

  explicit Polynomial(std::size_t dimension);
  Polynomial(std::size_t dimension, Terms terms);

  static Polynomial constant(std::size_t dimension, Complex value);
  static Polynomial monomial(const MultiIndex& alpha, Complex coefficient = 1.0);
  /// The coordinate function x_axis.
  static Polynomial coordinate(std::size_t dimension, std::size_t axis);

  std::size_t dimension() const { return dimension_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  Complex coefficient(const MultiIndex& alpha) const;
  /// Sum of absolute values of the coefficients.
  Real coefficient_l1() const;

  Complex operator()(const RealVector& x) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(Complex s) const;
  Polynomial operator-() const { return *this * Complex(-1.0); }

  bool operator==(const Polynomial&) const = default;

 private:
  void prune();

  std::size_t dimension_;
  Terms terms_;
};

inline Polynomial operator*(Complex s, const Polynomial& p) { return p * s; }

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
/// Exact partial derivative with respect to x_axis (zero-based axis).
Polynomial poly_diff(const Polynomial& p, std::size_t axis);
/// q(x) = p(x - shift), expanded binomially.
Polynomial poly_shift(const Polynomial& p, const RealVector& shift);
/// q(y) = p(-y).
Polynomial poly_reflect(const Polynomial& p);
/// Largest absolute difference of matching coefficients, missing terms read as zero.
Real coefficient_distance(const Polynomial& p, const Polynomial& q);

}  // namespace schwartz
