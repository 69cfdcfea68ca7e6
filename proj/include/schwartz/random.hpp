#pragma once

#include <cstdint>
#include <random>

#include "schwartz/atom.hpp"

namespace schwartz {

/// Shape of randomly generated test functions.
struct CorpusShape {
  std::size_t dimension = 1;
  int max_atoms = 3;
  int max_degree = 4;
  int max_terms = 4;
  /// Eigenvalues of generated quadratic forms lie in [min_eigenvalue, min_eigenvalue + spread].
  Real min_eigenvalue = 0.5;
  Real spread = 2.0;
  Real linear_scale = 1.0;
};

/// Deterministic generator of atoms and functions. Uses its own uniform
/// mapping so draws are identical across standard libraries.
class RandomCorpus {
 public:
  explicit RandomCorpus(std::uint64_t seed) : engine_(seed) {}

  Real uniform(Real lo, Real hi);
  int integer(int lo, int hi);
  Complex complex_uniform(Real scale);
  RealVector vector(std::size_t n, Real lo, Real hi);
  RealMatrix spd_matrix(std::size_t n, Real min_eigenvalue, Real spread);
  Polynomial polynomial(std::size_t n, int max_degree, int max_terms);
  GaussianAtom atom(const CorpusShape& shape);
  SchwartzFunction function(const CorpusShape& shape);

 private:
  std::mt19937_64 engine_;
};

}  // namespace schwartz
