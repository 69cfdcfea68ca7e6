#pragma once

#include "schwartz/atom.hpp"

namespace schwartz {

// Every operation here returns a canonicalized SchwartzFunction.

SchwartzFunction add(const SchwartzFunction& f, const SchwartzFunction& g);
SchwartzFunction subtract(const SchwartzFunction& f, const SchwartzFunction& g);
SchwartzFunction scale(const SchwartzFunction& f, Complex s);
/// Pointwise product: polynomials multiply, quadratic and linear terms add.
SchwartzFunction multiply(const SchwartzFunction& f, const SchwartzFunction& g);
/// x -> f(x - a).
SchwartzFunction translate(const SchwartzFunction& f, const RealVector& a);
/// x -> exp(2 pi i b.x) f(x).
SchwartzFunction modulate(const SchwartzFunction& f, const RealVector& b);
SchwartzFunction poly_multiply(const SchwartzFunction& f, const Polynomial& p);
/// Exact mixed partial derivative d^beta f.
SchwartzFunction differentiate(const SchwartzFunction& f, const MultiIndex& beta);
/// Exact integral over R^n, realized as the Fourier transform at the origin.
Complex integrate(const SchwartzFunction& f);

/// One partial derivative of a single atom along a zero-based axis.
GaussianAtom differentiate_atom(const GaussianAtom& atom, std::size_t axis);

inline SchwartzFunction operator+(const SchwartzFunction& f, const SchwartzFunction& g) { return add(f, g); }
inline SchwartzFunction operator-(const SchwartzFunction& f, const SchwartzFunction& g) {
  return subtract(f, g);
}
inline SchwartzFunction operator*(const SchwartzFunction& f, const SchwartzFunction& g) {
  return multiply(f, g);
}
inline SchwartzFunction operator*(Complex s, const SchwartzFunction& f) { return scale(f, s); }
inline SchwartzFunction operator*(const Polynomial& p, const SchwartzFunction& f) { return poly_multiply(f, p); }

}  // namespace schwartz
