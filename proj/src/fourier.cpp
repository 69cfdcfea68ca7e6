#include "schwartz/fourier.hpp"

#include <cmath>
#include <map>

#include "schwartz/calculus.hpp"

namespace schwartz {

GaussianTransform gaussian_ft_base(const RealMatrix& a, const ComplexVector& c) {
  const auto n = a.rows();
  if (a.cols() != n || c.size() != n) throw DimensionError("gaussian_ft_base: shape mismatch");
  Eigen::LLT<RealMatrix> llt(a);
  if (llt.info() != Eigen::Success) throw DomainError("gaussian_ft_base: quadratic form is not positive-definite");
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(a, Eigen::EigenvaluesOnly);
  const Real lo = eig.eigenvalues().minCoeff();
  const Real hi = eig.eigenvalues().maxCoeff();
  if (lo <= 0.0 || hi / lo > kMaxConditionNumber) {
    throw DomainError("gaussian_ft_base: degenerate quadratic form (condition number above 1e12)");
  }
  RealMatrix inv = llt.solve(RealMatrix::Identity(n, n));
  inv = (0.5 * (inv + inv.transpose())).eval();
  const Real sqrt_det = llt.matrixL().toDenseMatrix().diagonal().prod();
  const ComplexVector inv_c = inv.cast<Complex>() * c;
  const Complex quad = (c.transpose() * inv_c).value();

  GaussianTransform out;
  out.scalar = std::pow(kPi, 0.5 * static_cast<Real>(n)) / sqrt_det * std::exp(quad / 4.0);
  out.quadratic = kPi * kPi * inv;
  out.linear = Complex(0.0, -kPi) * inv_c;
  return out;
}

namespace {

// Transform of one atom. Monomials are eliminated with
//   FT(x^alpha g) = (-1 / (2 pi i))^{|alpha|} d^alpha FT(g),
// reusing lower-order derivatives of the base transform in graded-lex order.
std::vector<GaussianAtom> fourier_atom(const GaussianAtom& atom) {
  const std::size_t n = atom.dimension();
  const GaussianTransform base = gaussian_ft_base(atom.quadratic(), atom.linear());
  const GaussianAtom base_atom(Polynomial::constant(n, base.scalar), base.quadratic, base.linear);

  std::map<MultiIndex, Polynomial> derivatives;
  derivatives.emplace(MultiIndex::zero(n), base_atom.polynomial());
  auto derivative = [&](auto&& self, const MultiIndex& alpha) -> const Polynomial& {
    if (auto it = derivatives.find(alpha); it != derivatives.end()) return it->second;
    std::size_t axis = 0;
    while (alpha[axis] == 0) ++axis;
    const Polynomial& lower = self(self, alpha.with(axis, alpha[axis] - 1));
    Polynomial next = differentiate_atom(base_atom.with_polynomial(lower), axis).polynomial();
    return derivatives.emplace(alpha, std::move(next)).first->second;
  };

  const Complex unit = Complex(0.0, 1.0 / (2.0 * kPi));  // -1 / (2 pi i)
  Polynomial total(n);
  for (const auto& [alpha, coeff] : atom.polynomial().terms()) {
    total = total + derivative(derivative, alpha) * (coeff * std::pow(unit, alpha.degree()));
  }
  return {base_atom.with_polynomial(std::move(total))};
}

}  // namespace

SchwartzFunction fourier(const SchwartzFunction& f) {
  std::vector<GaussianAtom> atoms;
  for (const auto& atom : f.atoms()) {
    auto transformed = fourier_atom(atom);
    atoms.insert(atoms.end(), transformed.begin(), transformed.end());
  }
  return canonicalize(SchwartzFunction(f.dimension(), std::move(atoms)));
}

SchwartzFunction reflect(const SchwartzFunction& f) {
  std::vector<GaussianAtom> atoms;
  for (const auto& atom : f.atoms()) {
    atoms.emplace_back(poly_reflect(atom.polynomial()), atom.quadratic(), -atom.linear());
  }
  return canonicalize(SchwartzFunction(f.dimension(), std::move(atoms)));
}

SchwartzFunction inverse_fourier(const SchwartzFunction& f) { return reflect(fourier(f)); }

SchwartzFunction convolve(const SchwartzFunction& f, const SchwartzFunction& g) {
  require_dimension(f.dimension(), g.dimension(), "convolve");
  return inverse_fourier(multiply(fourier(f), fourier(g)));
}

}  // namespace schwartz
