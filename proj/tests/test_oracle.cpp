#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schwartz/calculus.hpp"
#include "schwartz/oracle.hpp"
#include "test_support.hpp"

using namespace schwartz;
using schwartz::testing::vec;

TEST_CASE("numeric_ft_oracle on gauss(pi)") {
  const SchwartzFunction g = gaussian(kPi);
  const Complex at0 = numeric_ft_oracle(g, vec({0.0}), 6.0, 2048);
  CHECK(std::abs(at0 - 1.0) < 1e-8);
  CHECK(std::abs(numeric_ft_oracle(g, vec({1.0}), 6.0, 2048) - std::exp(-kPi)) < 1e-8);
  // self-convergence under doubling
  CHECK(std::abs(numeric_ft_oracle(g, vec({0.0}), 6.0, 4096) - at0) < 1e-10);
  CHECK(numeric_ft_oracle(SchwartzFunction::zero(1), vec({0.3}), 6.0, 64) == Complex(0.0));
}

TEST_CASE("numeric_ft_oracle in two dimensions") {
  RealMatrix a(2, 2);
  a << kPi, 0.0, 0.0, kPi;
  const SchwartzFunction g = gaussian(a);
  const Complex v = numeric_ft_oracle(g, vec({0.5, -0.25}), 6.0, 256);
  CHECK(std::abs(v - std::exp(-kPi * (0.25 + 0.0625))) < 1e-10);
}

TEST_CASE("numeric_conv_oracle") {
  const SchwartzFunction g = gaussian(kPi);
  CHECK(std::abs(numeric_conv_oracle(g, g, vec({0.0}), 8.0, 4096) - 1.0 / std::sqrt(2.0)) < 1e-6);
  CHECK(numeric_conv_oracle(g, SchwartzFunction::zero(1), vec({0.2}), 8.0, 64) == Complex(0.0));
  const Complex plus = numeric_conv_oracle(g, g, vec({0.7}), 8.0, 1024);
  const Complex minus = numeric_conv_oracle(g, g, vec({-0.7}), 8.0, 1024);
  CHECK(std::abs(plus - minus) < 1e-15);
}

TEST_CASE("dense_sup_oracle") {
  const SchwartzFunction g = gaussian(kPi);
  const MultiIndex z{0};
  CHECK(dense_sup_oracle(g, SeminormIndex(z, z), 5.0, 1001) == doctest::Approx(1.0).epsilon(1e-15));
  const Real m = dense_sup_oracle(g, SeminormIndex(MultiIndex{1}, z), 5.0, 1000001);
  CHECK(std::abs(m - 1.0 / std::sqrt(2.0 * kPi * std::exp(1.0))) < 1e-9);
  CHECK(std::abs(m - 0.241971) < 1e-6);
  CHECK(dense_sup_oracle(SchwartzFunction::zero(1), SeminormIndex(z, z), 5.0, 101) == 0.0);
}

TEST_CASE("trapezoid_cube") {
  const Complex one = trapezoid_cube([](const RealVector&) { return Complex(1.0); }, 2, 1.0, 17);
  CHECK(std::abs(one - 4.0) < 1e-14);
  CHECK_THROWS_AS((trapezoid_cube([](const RealVector&) { return Complex(1.0); }, 1, 1.0, 15)), Error);
}

TEST_CASE("pairwise_sum does not depend on the grouping of equal sizes") {
  std::vector<Complex> values;
  for (int k = 0; k < 1000; ++k) values.emplace_back(1.0 / (k + 1), 0.0);
  const Complex s = detail::pairwise_sum(values);
  Complex naive = 0.0;
  for (const Complex& v : values) naive += v;
  CHECK(std::abs(s - naive) < 1e-12);
  CHECK(detail::pairwise_sum({}) == Complex(0.0));
}
