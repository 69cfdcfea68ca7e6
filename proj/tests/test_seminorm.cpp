#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schwartz/calculus.hpp"
#include "schwartz/oracle.hpp"
#include "schwartz/random.hpp"
#include "schwartz/seminorm.hpp"
#include "test_support.hpp"

using namespace schwartz;
using schwartz::testing::vec;

namespace {

const MultiIndex z1{0};

SeminormIndex idx1(int a, int b) { return SeminormIndex(MultiIndex{a}, MultiIndex{b}); }

}  // namespace

TEST_CASE("seminorm of gauss(pi)") {
  const SchwartzFunction g = gaussian(kPi);
  const SeminormResult r0 = seminorm(g, idx1(0, 0));
  CHECK(r0.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(r0.witness[0]) < 1e-6);

  // sup |x| e^{-pi x^2} = (2 pi e)^{-1/2}
  const SeminormResult r1 = seminorm(g, idx1(1, 0));
  CHECK(std::abs(r1.value - 1.0 / std::sqrt(2.0 * kPi * std::exp(1.0))) < 1e-6);
  CHECK(std::abs(r1.value - 0.241971) < 1e-6);
  CHECK(std::abs(std::abs(r1.witness[0]) - 1.0 / std::sqrt(2.0 * kPi)) < 1e-4);
  CHECK(r1.tail_bound < 1e-3 * r1.value);
}

TEST_CASE("seminorm of zero") {
  const SeminormResult r = seminorm(SchwartzFunction::zero(2), SeminormIndex(MultiIndex{1, 0}, MultiIndex{0, 1}));
  CHECK(r.value == 0.0);
  CHECK(r.witness.norm() == 0.0);
}

TEST_CASE("seminorm rejects mismatched dimensions") {
  CHECK_THROWS_AS((seminorm(gaussian(kPi), SeminormIndex(MultiIndex{0, 0}, MultiIndex{0, 0}))), DimensionError);
}

TEST_CASE("tail bound dominates the function outside the radius") {
  RandomCorpus rc(41);
  for (int k = 0; k < 10; ++k) {
    CorpusShape s;
    s.dimension = 1;
    const SchwartzFunction f = rc.function(s);
    for (Real r : {1.0, 2.0, 4.0}) {
      const Real bound = gaussian_tail_bound(f, r);
      for (int j = 0; j < 50; ++j) {
        const Real x = r + 0.1 * j;
        CHECK(std::abs(evaluate(f, vec({x}))) <= bound * (1 + 1e-12));
        CHECK(std::abs(evaluate(f, vec({-x}))) <= bound * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("seminorm_distance") {
  const SchwartzFunction g = gaussian(kPi);
  CHECK(seminorm_distance(g, g, idx1(0, 0)) == 0.0);
  CHECK(seminorm_distance(scale(g, 2.0), g, idx1(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));

  const SchwartzFunction shifted = translate(g, vec({0.1}));
  const Real d = seminorm_distance(g, shifted, idx1(0, 0));
  const Real dense = dense_sup_oracle(subtract(g, shifted), idx1(0, 0), 6.0, 1200001);
  CHECK(d > 0.0);
  CHECK(std::abs(d - dense) <= 1e-6 * dense);
}

TEST_CASE("seminorm axioms on random pairs") {
  RandomCorpus rc(42);
  const std::vector<SeminormIndex> indices = {idx1(0, 0), idx1(1, 0), idx1(0, 1), idx1(2, 1)};
  for (int k = 0; k < 5; ++k) {
    CorpusShape s;
    s.max_atoms = 2;
    s.max_degree = 2;
    const SchwartzFunction f = rc.function(s);
    const SchwartzFunction g = rc.function(s);
    const Complex c = rc.complex_uniform(3.0);
    for (const SeminormIndex& idx : indices) {
      const Real nf = seminorm(f, idx).value;
      const Real ng = seminorm(g, idx).value;
      CHECK(seminorm(add(f, g), idx).value <= nf + ng + 1e-9);
      CHECK(std::abs(seminorm(scale(f, c), idx).value - std::abs(c) * nf) <= 1e-9 * std::max(1.0, nf));
    }
  }
}

TEST_CASE("two-dimensional seminorm agrees with a dense grid") {
  RealMatrix a(2, 2);
  a << 2.0, 0.5, 0.5, 1.0;
  ComplexVector c(2);
  c << Complex(0.3, 1.0), Complex(-0.2, 0.0);
  const SchwartzFunction f = GaussianAtom(Polynomial::monomial(MultiIndex{1, 0}), a, c);
  const SeminormIndex idx(MultiIndex{0, 1}, MultiIndex{1, 0});
  const Real v = seminorm(f, idx).value;
  const Real dense = dense_sup_oracle(f, idx, 3.0, 3001);
  CHECK(v >= dense * (1 - 1e-9));
  CHECK(std::abs(v - dense) <= 1e-5 * dense);
}

TEST_CASE("check_convergence") {
  const SchwartzFunction g = gaussian(kPi);
  std::vector<SchwartzFunction> seq;
  for (int j = 1; j <= 30; ++j) seq.push_back(scale(g, 1.0 + 1.0 / j));

  const ConvergenceReport r = check_convergence(seq, g, {idx1(0, 0)}, 0.05);
  CHECK(r.passed);
  REQUIRE(r.indices.size() == 1);
  for (std::size_t j = 0; j < 30; ++j) CHECK(r.indices[0].distances[j] == doctest::Approx(1.0 / (j + 1)));
  CHECK(r.indices[0].monotone_tail);

  const std::vector<SchwartzFunction> constant(5, g);
  const ConvergenceReport rc = check_convergence(constant, g, {idx1(0, 0), idx1(1, 1)}, 1e-12);
  CHECK(rc.passed);
  for (const auto& ic : rc.indices)
    for (Real d : ic.distances) CHECK(d == 0.0);

  CHECK_THROWS_AS((check_convergence({}, g, {idx1(0, 0)}, 0.05)), Error);
}

TEST_CASE("translated sequence converges at index (0,1)") {
  const SchwartzFunction g = gaussian(kPi);
  std::vector<SchwartzFunction> seq;
  for (int j = 1; j <= 50; ++j) seq.push_back(translate(g, vec({1.0 / j})));
  const ConvergenceReport r = check_convergence(seq, g, {idx1(0, 1)}, 0.13);
  const auto& d = r.indices[0].distances;
  for (std::size_t j = 1; j < d.size(); ++j) CHECK(d[j] < d[j - 1]);
  CHECK(r.passed);
  // For small shifts the distance is close to (1/j) sup |f''| = 2 pi / j.
  CHECK(std::abs(d.back() - 2.0 * kPi / 50.0) < 2e-3);
  const Real dense = dense_sup_oracle(subtract(seq.back(), g), idx1(0, 1), 6.0, 1200001);
  CHECK(std::abs(d.back() - dense) <= 1e-6 * dense);
}

TEST_CASE("check_cauchy") {
  const SchwartzFunction g = gaussian(kPi);
  std::vector<SchwartzFunction> conv;
  std::vector<SchwartzFunction> grow;
  std::vector<SchwartzFunction> alt;
  for (int j = 1; j <= 30; ++j) {
    conv.push_back(scale(g, 1.0 + 1.0 / j));
    grow.push_back(scale(g, static_cast<Real>(j)));
    alt.push_back(scale(g, j % 2 ? 1.0 : 2.0));
  }
  CHECK(check_cauchy(conv, {idx1(0, 0)}, 0.05).passed);
  const CauchyReport g_report = check_cauchy(grow, {idx1(0, 0)}, 0.05);
  CHECK_FALSE(g_report.passed);
  CHECK(g_report.max_tail_distance == doctest::Approx(7.0));
  CHECK_FALSE(check_cauchy(alt, {idx1(0, 0)}, 0.05).passed);
  CHECK_FALSE(check_convergence(grow, g, {idx1(0, 0)}, 0.05).passed);
  CHECK_THROWS_AS((check_cauchy({g}, {idx1(0, 0)}, 0.05)), Error);
}
