#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schwartz/calculus.hpp"
#include "schwartz/distribution.hpp"
#include "schwartz/fourier.hpp"
#include "schwartz/random.hpp"
#include "schwartz/verify.hpp"
#include "test_support.hpp"

using namespace schwartz;
using schwartz::testing::central_difference;
using schwartz::testing::simpson;
using schwartz::testing::vec;

namespace {

SchwartzFunction x_times(const SchwartzFunction& f) { return poly_multiply(f, Polynomial::coordinate(1, 0)); }

std::vector<SchwartzFunction> test_functions(std::uint64_t seed, std::size_t n, int count) {
  RandomCorpus rc(seed);
  CorpusShape s;
  s.dimension = n;
  std::vector<SchwartzFunction> out;
  for (int k = 0; k < count; ++k) out.push_back(rc.function(s));
  return out;
}

Real tol(Complex v, Real rel) { return rel * std::max(1.0, std::abs(v)); }

}  // namespace

TEST_CASE("pairing examples") {
  const SchwartzFunction g = gaussian(kPi);
  const auto d0 = TemperedDistribution::delta(vec({0.0}));
  CHECK(std::abs(pair(d0, g) - 1.0) < 1e-15);

  const Complex dv = pair(derivative(d0, MultiIndex{1}), x_times(g));
  CHECK(std::abs(dv + 1.0) < 1e-15);
  const Complex fd = central_difference([&](const RealVector& x) { return evaluate(x_times(g), x); }, vec({0.0}), 0,
                                        1e-5);
  CHECK(std::abs(dv + fd) < 1e-8);

  const Complex fw = pair(fourier_distribution(d0), g);
  const Complex q = simpson([](Real x) { return Complex(std::exp(-kPi * x * x)); }, -8.0, 8.0, 4000);
  CHECK(std::abs(fw - 1.0) < 1e-14);
  CHECK(std::abs(fw - q) < 1e-12);

  CHECK_THROWS_AS((pair(d0, SchwartzFunction::zero(2))), DimensionError);
}

TEST_CASE("densities integrate") {
  const SchwartzFunction g = gaussian(kPi);
  const auto one = TemperedDistribution::poly_density(Polynomial::constant(1, 1.0));
  CHECK(std::abs(pair(one, g) - 1.0) < 1e-14);
  // int x^2 e^{-pi x^2} = 1 / (2 pi)
  const auto x2 = TemperedDistribution::poly_density(Polynomial::monomial(MultiIndex{2}));
  CHECK(std::abs(pair(x2, g) - 1.0 / (2.0 * kPi)) < 1e-14);
  const auto h = TemperedDistribution::schwartz_density(g);
  CHECK(std::abs(pair(h, g) - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(pair(TemperedDistribution::zero(1), g) == Complex(0.0));
}

TEST_CASE("derivative nodes fuse and the zero index is the identity") {
  const auto d0 = TemperedDistribution::delta(vec({0.0, 0.0}));
  CHECK(derivative(d0, MultiIndex{0, 0}).node_ptr() == d0.node_ptr());

  const auto twice = derivative(derivative(d0, MultiIndex{1, 0}), MultiIndex{1, 1});
  const auto* fused = std::get_if<node::Derivative>(&twice.node().kind);
  REQUIRE(fused != nullptr);
  CHECK(fused->alpha == MultiIndex{2, 1});
  CHECK(fused->child == d0.node_ptr());

  const auto lhs = derivative(derivative(d0, MultiIndex{1, 0}), MultiIndex{1, 0});
  for (const SchwartzFunction& f : test_functions(51, 2, 10)) {
    const Complex expect = pair(d0, differentiate(f, MultiIndex{2, 0}));
    CHECK(std::abs(pair(lhs, f) - expect) <= tol(expect, 1e-10));
  }
  CHECK_THROWS_AS((derivative(d0, MultiIndex{1})), DimensionError);
}

TEST_CASE("derivative of a density is integration by parts") {
  RandomCorpus rc(52);
  CorpusShape s;
  const SchwartzFunction h = rc.function(s);
  const auto lhs = derivative(TemperedDistribution::schwartz_density(h), MultiIndex{1});
  const auto rhs = TemperedDistribution::schwartz_density(differentiate(h, MultiIndex{1}));
  for (const SchwartzFunction& f : test_functions(53, 1, 10)) {
    const Complex r = pair(rhs, f);
    CHECK(std::abs(pair(lhs, f) - r) <= tol(r, 1e-10));
  }
}

TEST_CASE("multiplication formula holds numerically") {
  // int h^ f = int h f^, checked with independent Simpson quadrature of both sides
  RandomCorpus rc(54);
  CorpusShape s;
  s.max_atoms = 2;
  for (int k = 0; k < 3; ++k) {
    const SchwartzFunction h = rc.function(s);
    const SchwartzFunction f = rc.function(s);
    const SchwartzFunction hh = fourier(h);
    const SchwartzFunction fh = fourier(f);
    const auto lhs_g = [&](Real x) { return evaluate(hh, vec({x})) * evaluate(f, vec({x})); };
    const auto rhs_g = [&](Real x) { return evaluate(h, vec({x})) * evaluate(fh, vec({x})); };
    const Complex lhs = simpson(lhs_g, -14.0, 14.0, 20000);
    const Complex rhs = simpson(rhs_g, -14.0, 14.0, 20000);
    CHECK(std::abs(lhs - rhs) <= tol(lhs, 1e-9));
  }
}

TEST_CASE("fourier of a density is the density of the transform") {
  RandomCorpus rc(55);
  CorpusShape s;
  s.dimension = 2;
  const SchwartzFunction h = rc.function(s);
  const auto lhs = fourier_distribution(TemperedDistribution::schwartz_density(h));
  const auto rhs = TemperedDistribution::schwartz_density(fourier(h));
  for (const SchwartzFunction& f : test_functions(56, 2, 10)) {
    const Complex r = pair(rhs, f);
    CHECK(std::abs(pair(lhs, f) - r) <= tol(r, 1e-8));
  }
}

TEST_CASE("double transform pairs with the reflection") {
  const auto lambda =
      TemperedDistribution::delta(vec({0.3})) + 2.0 * TemperedDistribution::poly_density(Polynomial::coordinate(1, 0));
  const auto twice = fourier_distribution(fourier_distribution(lambda));
  for (const SchwartzFunction& f : test_functions(57, 1, 10)) {
    const Complex r = pair(lambda, reflect(f));
    CHECK(std::abs(pair(twice, f) - r) <= tol(r, 1e-10));
  }
  CHECK(pair(fourier_distribution(TemperedDistribution::zero(1)), gaussian(kPi)) == Complex(0.0));
}

TEST_CASE("sums and scales are linear") {
  const auto a = TemperedDistribution::delta(vec({0.5}));
  const auto b = TemperedDistribution::poly_density(Polynomial::monomial(MultiIndex{2}));
  const Complex s(0.5, -2.0);
  for (const SchwartzFunction& f : test_functions(58, 1, 5)) {
    const Complex expect = pair(a, f) + s * pair(b, f);
    CHECK(std::abs(pair(a + s * b, f) - expect) <= tol(expect, 1e-13));
    CHECK(std::abs(pair(a - b, f) - (pair(a, f) - pair(b, f))) <= tol(expect, 1e-13));
  }
}

TEST_CASE("continuity witness for the point mass") {
  const auto d0 = TemperedDistribution::delta(vec({0.0}));
  const std::vector<SeminormIndex> idx = {SeminormIndex(MultiIndex{0}, MultiIndex{0})};
  std::vector<SchwartzFunction> corpus = test_functions(59, 1, 6);
  corpus.push_back(gaussian(kPi));
  const ContinuityWitness w = find_continuity_witness(d0, corpus, idx);
  CHECK(w.constant <= 1.0 + 1e-9);
  CHECK(w.constant >= 1.0 - 1e-9);
  CHECK(w.margin >= 0.0);
  CHECK(witness_holds(w, d0, corpus));

  const auto dd = derivative(d0, MultiIndex{1});
  const std::vector<SeminormIndex> idx1 = {SeminormIndex(MultiIndex{0}, MultiIndex{1})};
  const ContinuityWitness wd = find_continuity_witness(dd, corpus, idx1);
  CHECK(wd.constant <= 1.0 + 1e-9);
}

TEST_CASE("continuity witness for the unit density") {
  const auto one = TemperedDistribution::poly_density(Polynomial::constant(1, 1.0));
  const std::vector<SeminormIndex> idx = {SeminormIndex(MultiIndex{0}, MultiIndex{0}),
                                          SeminormIndex(MultiIndex{2}, MultiIndex{0})};
  const auto corpus = verify::poly_density_witness_corpus();
  REQUIRE(corpus.size() == 20);
  const ContinuityWitness w = find_continuity_witness(one, corpus, idx);
  CHECK(std::isfinite(w.constant));
  CHECK(w.constant <= kPi + 1e-6);
  CHECK(witness_holds(w, one, corpus));
}

TEST_CASE("continuity witness errors") {
  const auto d0 = TemperedDistribution::delta(vec({0.0}));
  const std::vector<SeminormIndex> idx = {SeminormIndex(MultiIndex{0}, MultiIndex{0})};
  CHECK_THROWS_AS((find_continuity_witness(d0, {}, idx)), Error);
  // the zero function pairs to zero, so it never constrains C
  const auto one = TemperedDistribution::poly_density(Polynomial::constant(1, 1.0));
  CHECK_NOTHROW((find_continuity_witness(one, {SchwartzFunction::zero(1)}, idx)));
}
