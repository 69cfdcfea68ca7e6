#pragma once

#include "schwartz/atom.hpp"

namespace schwartz {

/// Closed form of the transform of exp(-x.Ax + c.x):
///   scalar * exp(-xi.A'xi + c'.xi),
///   A' = pi^2 A^{-1},  c' = -pi i A^{-1} c,
///   scalar = pi^{n/2} det(A)^{-1/2} exp(c.A^{-1}c / 4)
/// with c.A^{-1}c the bilinear (not Hermitian) form.
struct GaussianTransform {
  Complex scalar;
  RealMatrix quadratic;
  ComplexVector linear;
};

/// Throws DomainError when A is not SPD or its condition number exceeds
/// kMaxConditionNumber.
GaussianTransform gaussian_ft_base(const RealMatrix& a, const ComplexVector& c);

/// f^(xi) = int f(x) exp(-2 pi i xi.x) dx, exact on the atom family.
SchwartzFunction fourier(const SchwartzFunction& f);
/// phi-check(y) = int phi(eta) exp(2 pi i y.eta) d eta = reflect(fourier(phi)).
SchwartzFunction inverse_fourier(const SchwartzFunction& f);
/// y -> f(-y).
SchwartzFunction reflect(const SchwartzFunction& f);
/// (f * g)(x) = int f(y) g(x - y) dy, computed as the inverse transform of
/// the product of transforms.
SchwartzFunction convolve(const SchwartzFunction& f, const SchwartzFunction& g);

}  // namespace schwartz
