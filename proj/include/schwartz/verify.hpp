#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "schwartz/atom.hpp"
#include "schwartz/seminorm.hpp"

namespace schwartz::verify {

/// One checked property: `worst` is the largest observed error (or the
/// observed statistic) and passes when it does not exceed `tolerance`.
struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  Real worst = 0.0;
  Real tolerance = 0.0;
  bool passed = false;
};

struct SuiteResult {
  std::string name;
  std::vector<PropertyResult> properties;
  bool passed() const;
};

/// roundtrip, convolution, exchange, oracle, seminorm, duality.
const std::vector<std::string>& suite_names();

/// Deterministic given the seed. Throws Error for an unknown suite name;
/// "all" is not a suite, callers expand it with suite_names().
SuiteResult run_suite(std::string_view name, std::uint64_t seed);

// Individual properties, shared by the CLI suites and the acceptance tests.

PropertyResult inversion_roundtrip(std::uint64_t seed, std::size_t count, bool inverse_first);
PropertyResult convolution_vs_quadrature(std::uint64_t seed, std::size_t pairs, std::size_t points);
PropertyResult convolution_closed_form();
PropertyResult convolution_commutes(std::uint64_t seed, std::size_t pairs);
/// FT(x^beta f) = (-1/(2 pi i))^{|beta|} d^beta FT(f).
PropertyResult exchange_polynomial_to_derivative(std::uint64_t seed, std::size_t count);
/// xi^beta FT(f) = (2 pi i)^{-|beta|} FT(d^beta f).
PropertyResult exchange_derivative_to_polynomial(std::uint64_t seed, std::size_t count);
PropertyResult fourier_vs_quadrature(std::uint64_t seed, std::size_t functions, std::size_t points);
PropertyResult fourier_linearity(std::uint64_t seed, std::size_t count);
PropertyResult seminorm_triangle(std::uint64_t seed, std::size_t pairs);
PropertyResult seminorm_homogeneity(std::uint64_t seed, std::size_t count);
PropertyResult seminorm_vs_dense_oracle();
PropertyResult seminorm_gaussian_moment();
PropertyResult convergence_scaled_sequence();
PropertyResult divergence_detected();
PropertyResult distribution_derivative_sign(std::uint64_t seed, std::size_t tests);
PropertyResult distribution_integration_by_parts(std::uint64_t seed, std::size_t tests);
PropertyResult distribution_fourier_wrap(std::uint64_t seed, std::size_t tests);
PropertyResult distribution_density_fourier(std::uint64_t seed, std::size_t tests);
PropertyResult distribution_double_transform(std::uint64_t seed, std::size_t tests);
PropertyResult distribution_linearity(std::uint64_t seed, std::size_t tests);
PropertyResult continuity_delta(std::uint64_t seed, std::size_t corpus_size);
PropertyResult continuity_poly_density();
PropertyResult dsl_roundtrip();

/// Entry of the fixed seminorm reference corpus with its brute-force grid.
struct SeminormReference {
  std::string expression;
  SeminormIndex index;
  Real half_width;
  int points_per_axis;
};
const std::vector<SeminormReference>& seminorm_reference_corpus();

/// Twenty one-dimensional functions used for the polynomial-density witness.
std::vector<SchwartzFunction> poly_density_witness_corpus();

/// Thirty DSL expressions covering every constructor and combinator.
const std::vector<std::string>& dsl_corpus();

}  // namespace schwartz::verify
