#include "schwartz/calculus.hpp"

#include "schwartz/fourier.hpp"

namespace schwartz {

namespace {

std::size_t dim_of(const RealVector& v) { return static_cast<std::size_t>(v.size()); }

RealVector zeros(std::size_t n) { return RealVector::Zero(static_cast<Eigen::Index>(n)); }

}  // namespace

SchwartzFunction add(const SchwartzFunction& f, const SchwartzFunction& g) {
  require_dimension(f.dimension(), g.dimension(), "add");
  std::vector<GaussianAtom> atoms = f.atoms();
  atoms.insert(atoms.end(), g.atoms().begin(), g.atoms().end());
  return canonicalize(SchwartzFunction(f.dimension(), std::move(atoms)));
}

SchwartzFunction subtract(const SchwartzFunction& f, const SchwartzFunction& g) {
  return add(f, scale(g, -1.0));
}

SchwartzFunction scale(const SchwartzFunction& f, Complex s) {
  std::vector<GaussianAtom> atoms;
  atoms.reserve(f.atoms().size());
  for (const auto& a : f.atoms()) atoms.push_back(a.with_polynomial(a.polynomial() * s));
  return canonicalize(SchwartzFunction(f.dimension(), std::move(atoms)));
}

SchwartzFunction multiply(const SchwartzFunction& f, const SchwartzFunction& g) {
  require_dimension(f.dimension(), g.dimension(), "multiply");
  std::vector<GaussianAtom> atoms;
  for (const auto& a : f.atoms()) {
    for (const auto& b : g.atoms()) {
      atoms.emplace_back(a.polynomial() * b.polynomial(), a.quadratic() + b.quadratic(),
                         a.linear() + b.linear());
    }
  }
  return canonicalize(SchwartzFunction(f.dimension(), std::move(atoms)));
}

SchwartzFunction translate(const SchwartzFunction& f, const RealVector& a) {
  require_dimension(f.dimension(), dim_of(a), "translate");
  const ComplexVector ac = a.cast<Complex>();
  std::vector<GaussianAtom> atoms;
  for (const auto& atom : f.atoms()) {
    // -(x-a).A(x-a) + c.(x-a) = -x.Ax + (c + 2Aa).x - a.Aa - c.a
    const RealMatrix& q = atom.quadratic();
    const ComplexVector c = atom.linear() + (2.0 * q * a).cast<Complex>();
    const Complex factor = std::exp(-a.dot(q * a) - (atom.linear().transpose() * ac).value());
    atoms.emplace_back(poly_shift(atom.polynomial(), a) * factor, q, c);
  }
  return canonicalize(SchwartzFunction(f.dimension(), std::move(atoms)));
}

SchwartzFunction modulate(const SchwartzFunction& f, const RealVector& b) {
  require_dimension(f.dimension(), dim_of(b), "modulate");
  const ComplexVector shift = Complex(0.0, 2.0 * kPi) * b.cast<Complex>();
  std::vector<GaussianAtom> atoms;
  for (const auto& atom : f.atoms()) {
    atoms.emplace_back(atom.polynomial(), atom.quadratic(), atom.linear() + shift);
  }
  return canonicalize(SchwartzFunction(f.dimension(), std::move(atoms)));
}

SchwartzFunction poly_multiply(const SchwartzFunction& f, const Polynomial& p) {
  require_dimension(f.dimension(), p.dimension(), "poly_multiply");
  std::vector<GaussianAtom> atoms;
  for (const auto& atom : f.atoms()) atoms.push_back(atom.with_polynomial(atom.polynomial() * p));
  return canonicalize(SchwartzFunction(f.dimension(), std::move(atoms)));
}

GaussianAtom differentiate_atom(const GaussianAtom& atom, std::size_t axis) {
  const std::size_t n = atom.dimension();
  if (axis >= n) throw DimensionError("differentiate: axis out of range");
  // d_j[P exp(Q)] = (d_j P + P (-2 (Ax)_j + c_j)) exp(Q)
  Polynomial::Terms gradient{{MultiIndex::zero(n), atom.linear()[static_cast<Eigen::Index>(axis)]}};
  for (std::size_t k = 0; k < n; ++k) {
    gradient[MultiIndex::unit(n, k)] += -2.0 * atom.quadratic()(axis, k);
  }
  const Polynomial& p = atom.polynomial();
  return atom.with_polynomial(poly_diff(p, axis) + p * Polynomial(n, std::move(gradient)));
}

SchwartzFunction differentiate(const SchwartzFunction& f, const MultiIndex& beta) {
  require_dimension(f.dimension(), beta.dimension(), "differentiate");
  std::vector<GaussianAtom> atoms;
  for (GaussianAtom atom : f.atoms()) {
    for (std::size_t j = 0; j < beta.dimension(); ++j) {
      for (int k = 0; k < beta[j]; ++k) atom = differentiate_atom(atom, j);
    }
    atoms.push_back(std::move(atom));
  }
  return canonicalize(SchwartzFunction(f.dimension(), std::move(atoms)));
}

Complex integrate(const SchwartzFunction& f) { return evaluate(fourier(f), zeros(f.dimension())); }

}  // namespace schwartz
