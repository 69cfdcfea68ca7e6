#pragma once

#include <vector>

#include "schwartz/polynomial.hpp"
#include "schwartz/types.hpp"

namespace schwartz {

/// x -> P(x) exp(-x.Ax + c.x) with A real symmetric positive-definite and c
/// complex. Translation and modulation factors are absorbed into P and c.
class GaussianAtom {
 public:
  /// Throws DomainError unless A is symmetric (to kSymmetryTolerance) with
  /// smallest eigenvalue at least kMinEigenvalue.
  GaussianAtom(Polynomial p, RealMatrix a, ComplexVector c);
  GaussianAtom(Polynomial p, RealMatrix a);

  std::size_t dimension() const { return poly_.dimension(); }
  const Polynomial& polynomial() const { return poly_; }
  const RealMatrix& quadratic() const { return a_; }
  const ComplexVector& linear() const { return c_; }
  Real min_eigenvalue() const { return lambda_min_; }
  Real max_eigenvalue() const { return lambda_max_; }

  /// Same exponent, different polynomial prefactor.
  GaussianAtom with_polynomial(Polynomial p) const;

  Complex operator()(const RealVector& x) const;

  /// Componentwise max distance between the (A, c) keys.
  Real key_distance(const GaussianAtom& other) const;

 private:
  GaussianAtom() : poly_(1) {}

  Polynomial poly_;
  RealMatrix a_;
  ComplexVector c_;
  Real lambda_min_ = 0.0;
  Real lambda_max_ = 0.0;
};

/// exp(-x.Ax) with unit prefactor.
GaussianAtom gaussian(const RealMatrix& a);
GaussianAtom gaussian(const RealMatrix& a, const ComplexVector& c);
/// One-dimensional exp(-a x^2).
GaussianAtom gaussian(Real a);

Complex atom_eval(const GaussianAtom& atom, const RealVector& x);

/// Finite sum of Gaussian atoms of a common dimension. The empty sum is zero.
class SchwartzFunction {
 public:
  explicit SchwartzFunction(std::size_t dimension);
  SchwartzFunction(std::size_t dimension, std::vector<GaussianAtom> atoms);
  SchwartzFunction(GaussianAtom atom);  // NOLINT(google-explicit-constructor)

  static SchwartzFunction zero(std::size_t dimension) { return SchwartzFunction(dimension); }

  std::size_t dimension() const { return dimension_; }
  const std::vector<GaussianAtom>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }

  Complex operator()(const RealVector& x) const;

 private:
  std::size_t dimension_;
  std::vector<GaussianAtom> atoms_;
};

/// Merges atoms with matching (A, c) keys, drops zero atoms and orders the
/// result lexicographically by (flattened A, c).
SchwartzFunction canonicalize(const SchwartzFunction& f);

Complex evaluate(const SchwartzFunction& f, const RealVector& x);

/// Coefficient distance between canonical forms: matched atoms compare
/// polynomial coefficients, unmatched atoms contribute their largest coefficient.
Real coefficient_distance(const SchwartzFunction& f, const SchwartzFunction& g);

/// Flattened form of a SchwartzFunction for evaluation on large grids.
class FunctionEvaluator {
 public:
  explicit FunctionEvaluator(const SchwartzFunction& f);

  std::size_t dimension() const { return n_; }
  Complex operator()(const Real* x) const;
  Complex operator()(const RealVector& x) const { return (*this)(x.data()); }

 private:
  struct Monomial {
    Complex coeff;
    std::size_t exponent_offset;
  };
  struct Atom {
    std::vector<Real> a;  // row-major n*n
    std::vector<Real> c_re, c_im;
    bool oscillates = false;
    std::vector<Monomial> monomials;
  };

  std::size_t n_;
  std::vector<Atom> atoms_;
  std::vector<int> exponents_;
};

}  // namespace schwartz
