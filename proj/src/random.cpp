#include "schwartz/random.hpp"

#include <cmath>

namespace schwartz {

Real RandomCorpus::uniform(Real lo, Real hi) {
  const Real u = static_cast<Real>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int RandomCorpus::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

Complex RandomCorpus::complex_uniform(Real scale) {
  const Real re = uniform(-scale, scale);
  const Real im = uniform(-scale, scale);
  return {re, im};
}

RealVector RandomCorpus::vector(std::size_t n, Real lo, Real hi) {
  RealVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = uniform(lo, hi);
  return v;
}

RealMatrix RandomCorpus::spd_matrix(std::size_t n, Real min_eigenvalue, Real spread) {
  const auto m = static_cast<Eigen::Index>(n);
  // Random orthogonal basis from a QR factorization, eigenvalues drawn directly.
  RealMatrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) g(i, j) = uniform(-1.0, 1.0);
  }
  const RealMatrix q = Eigen::HouseholderQR<RealMatrix>(g).householderQ();
  RealVector eig(m);
  for (Eigen::Index i = 0; i < m; ++i) eig[i] = min_eigenvalue + uniform(0.0, spread);
  RealMatrix a = q * eig.asDiagonal() * q.transpose();
  return 0.5 * (a + a.transpose());
}

Polynomial RandomCorpus::polynomial(std::size_t n, int max_degree, int max_terms) {
  Polynomial::Terms terms;
  const int count = integer(1, max_terms);
  for (int t = 0; t < count; ++t) {
    std::vector<int> e(n, 0);
    const int d = integer(0, max_degree);
    for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1))];
    terms[MultiIndex(std::move(e))] += complex_uniform(1.0);
  }
  Polynomial p(n, std::move(terms));
  return p.is_zero() ? Polynomial::constant(n, 1.0) : p;
}

GaussianAtom RandomCorpus::atom(const CorpusShape& shape) {
  const std::size_t n = shape.dimension;
  Polynomial p = polynomial(n, shape.max_degree, shape.max_terms);
  RealMatrix a = spd_matrix(n, shape.min_eigenvalue, shape.spread);
  ComplexVector c(static_cast<Eigen::Index>(n));
  for (Eigen::Index j = 0; j < c.size(); ++j) c[j] = complex_uniform(shape.linear_scale);
  return GaussianAtom(std::move(p), std::move(a), std::move(c));
}

SchwartzFunction RandomCorpus::function(const CorpusShape& shape) {
  const int count = integer(1, shape.max_atoms);
  std::vector<GaussianAtom> atoms;
  for (int k = 0; k < count; ++k) atoms.push_back(atom(shape));
  return canonicalize(SchwartzFunction(shape.dimension, std::move(atoms)));
}

}  // namespace schwartz
