#include "schwartz/verify.hpp"

#include <algorithm>
#include <cmath>

#include "schwartz/calculus.hpp"
#include "schwartz/distribution.hpp"
#include "schwartz/dsl.hpp"
#include "schwartz/fourier.hpp"
#include "schwartz/oracle.hpp"
#include "schwartz/random.hpp"

namespace schwartz::verify {

namespace {

PropertyResult finish(std::string name, std::size_t cases, Real worst, Real tolerance) {
  return {std::move(name), cases, worst, tolerance, std::isfinite(worst) && worst <= tolerance};
}

RealVector point(std::initializer_list<Real> xs) {
  RealVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (Real x : xs) v[k++] = x;
  return v;
}

MultiIndex random_index(RandomCorpus& rc, std::size_t n, int max_degree) {
  std::vector<int> e(n, 0);
  const int d = rc.integer(0, max_degree);
  for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(rc.integer(0, static_cast<int>(n) - 1))];
  return MultiIndex(std::move(e));
}

CorpusShape test_shape(std::size_t n) {
  CorpusShape s;
  s.dimension = n;
  s.max_atoms = 2;
  s.max_degree = 2;
  s.max_terms = 3;
  return s;
}

std::vector<SeminormIndex> standard_indices_1d() {
  std::vector<SeminormIndex> out;
  for (auto [a, b] : {std::pair{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}) {
    out.emplace_back(MultiIndex{a}, MultiIndex{b});
  }
  return out;
}

std::vector<SeminormIndex> standard_indices_2d() {
  std::vector<SeminormIndex> out;
  out.emplace_back(MultiIndex{0, 0}, MultiIndex{0, 0});
  out.emplace_back(MultiIndex{1, 0}, MultiIndex{0, 0});
  out.emplace_back(MultiIndex{0, 1}, MultiIndex{1, 0});
  out.emplace_back(MultiIndex{1, 1}, MultiIndex{0, 0});
  out.emplace_back(MultiIndex{0, 0}, MultiIndex{1, 1});
  out.emplace_back(MultiIndex{2, 0}, MultiIndex{0, 1});
  return out;
}

Complex power(Complex z, int k) {
  Complex r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

// --- inversion -------------------------------------------------------------

PropertyResult inversion_roundtrip(std::uint64_t seed, std::size_t count, bool inverse_first) {
  RandomCorpus rc(seed);
  Real worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    CorpusShape shape;
    shape.dimension = 1 + k % 3;
    shape.max_atoms = 3;
    shape.max_degree = 4;
    const SchwartzFunction f = rc.function(shape);
    const SchwartzFunction back = inverse_first ? fourier(inverse_fourier(f)) : inverse_fourier(fourier(f));
    worst = std::max(worst, coefficient_distance(back, f));
  }
  return finish(inverse_first ? "fourier_after_inverse" : "inverse_after_fourier", count, worst, 1e-10);
}

// --- convolution -----------------------------------------------------------

PropertyResult convolution_vs_quadrature(std::uint64_t seed, std::size_t pairs, std::size_t points) {
  RandomCorpus rc(seed);
  Real worst = 0.0;
  for (std::size_t k = 0; k < pairs; ++k) {
    const SchwartzFunction f = rc.function(test_shape(1));
    const SchwartzFunction g = rc.function(test_shape(1));
    const SchwartzFunction h = convolve(f, g);
    for (std::size_t p = 0; p < points; ++p) {
      const RealVector x = rc.vector(1, -2.0, 2.0);
      worst = std::max(worst, std::abs(evaluate(h, x) - numeric_conv_oracle(f, g, x, 12.0, 4096)));
    }
  }
  return finish("convolution_vs_quadrature", pairs * points, worst, 1e-6);
}

PropertyResult convolution_closed_form() {
  const SchwartzFunction g = gaussian(kPi);
  const SchwartzFunction h = convolve(g, g);
  Real worst = 0.0;
  for (Real x : {0.0, 0.5, 1.0}) {
    const Complex expected = std::sqrt(0.5) * std::exp(-kPi * x * x / 2.0);
    worst = std::max(worst, std::abs(evaluate(h, point({x})) - expected));
  }
  return finish("gaussian_self_convolution", 3, worst, 1e-10);
}

PropertyResult convolution_commutes(std::uint64_t seed, std::size_t pairs) {
  RandomCorpus rc(seed);
  Real worst = 0.0;
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t n = 1 + k % 2;
    const SchwartzFunction f = rc.function(test_shape(n));
    const SchwartzFunction g = rc.function(test_shape(n));
    worst = std::max(worst, coefficient_distance(convolve(f, g), convolve(g, f)));
  }
  return finish("convolution_commutes", pairs, worst, 1e-12);
}

// --- exchange identities ---------------------------------------------------

PropertyResult exchange_polynomial_to_derivative(std::uint64_t seed, std::size_t count) {
  RandomCorpus rc(seed);
  Real worst = 0.0;
  const Complex unit(0.0, 1.0 / (2.0 * kPi));  // -1 / (2 pi i)
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 1 + k % 2;
    const SchwartzFunction f = rc.function(test_shape(n));
    const MultiIndex beta = random_index(rc, n, 3);
    const SchwartzFunction lhs = fourier(poly_multiply(f, Polynomial::monomial(beta)));
    const SchwartzFunction rhs = scale(differentiate(fourier(f), beta), power(unit, beta.degree()));
    worst = std::max(worst, coefficient_distance(lhs, rhs));
  }
  return finish("polynomial_to_derivative", count, worst, 1e-10);
}

PropertyResult exchange_derivative_to_polynomial(std::uint64_t seed, std::size_t count) {
  RandomCorpus rc(seed);
  Real worst = 0.0;
  const Complex two_pi_i(0.0, 2.0 * kPi);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 1 + k % 2;
    const SchwartzFunction f = rc.function(test_shape(n));
    const MultiIndex beta = random_index(rc, n, 3);
    const SchwartzFunction lhs = poly_multiply(fourier(f), Polynomial::monomial(beta));
    const SchwartzFunction rhs = scale(fourier(differentiate(f, beta)), 1.0 / power(two_pi_i, beta.degree()));
    worst = std::max(worst, coefficient_distance(lhs, rhs));
  }
  return finish("derivative_to_polynomial", count, worst, 1e-10);
}

// --- pointwise oracle ------------------------------------------------------

PropertyResult fourier_vs_quadrature(std::uint64_t seed, std::size_t functions, std::size_t points) {
  RandomCorpus rc(seed);
  Real worst = 0.0;
  for (std::size_t k = 0; k < functions; ++k) {
    const std::size_t n = 1 + k % 2;
    CorpusShape shape;
    shape.dimension = n;
    shape.max_atoms = 2;
    const SchwartzFunction f = rc.function(shape);
    const SchwartzFunction ft = fourier(f);
    const int grid = n == 1 ? 4096 : 256;
    for (std::size_t p = 0; p < points; ++p) {
      const RealVector xi = rc.vector(n, -3.0, 3.0);
      worst = std::max(worst, std::abs(evaluate(ft, xi) - numeric_ft_oracle(f, xi, 12.0, grid)));
    }
  }
  return finish("fourier_vs_quadrature", functions * points, worst, 1e-6);
}

PropertyResult fourier_linearity(std::uint64_t seed, std::size_t count) {
  RandomCorpus rc(seed);
  Real worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 1 + k % 3;
    const SchwartzFunction f = rc.function(test_shape(n));
    const SchwartzFunction g = rc.function(test_shape(n));
    const Complex a = rc.complex_uniform(2.0);
    const Complex b = rc.complex_uniform(2.0);
    const SchwartzFunction lhs = fourier(add(scale(f, a), scale(g, b)));
    const SchwartzFunction rhs = add(scale(fourier(f), a), scale(fourier(g), b));
    worst = std::max(worst, coefficient_distance(lhs, rhs));
  }
  return finish("fourier_linearity", count, worst, 1e-12);
}

// --- seminorms -------------------------------------------------------------

PropertyResult seminorm_triangle(std::uint64_t seed, std::size_t pairs) {
  RandomCorpus rc(seed);
  Real worst = -std::numeric_limits<Real>::infinity();
  std::size_t cases = 0;
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t n = k % 5 == 4 ? 2 : 1;
    const SchwartzFunction f = rc.function(test_shape(n));
    const SchwartzFunction g = rc.function(test_shape(n));
    for (const auto& idx : n == 1 ? standard_indices_1d() : standard_indices_2d()) {
      const Real excess = seminorm(add(f, g), idx).value - seminorm(f, idx).value - seminorm(g, idx).value;
      worst = std::max(worst, excess);
      ++cases;
    }
  }
  return finish("triangle_inequality", cases, worst, 1e-9);
}

PropertyResult seminorm_homogeneity(std::uint64_t seed, std::size_t count) {
  RandomCorpus rc(seed);
  Real worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = k % 5 == 4 ? 2 : 1;
    const SchwartzFunction f = rc.function(test_shape(n));
    const Complex c = rc.complex_uniform(3.0);
    for (const auto& idx : n == 1 ? standard_indices_1d() : standard_indices_2d()) {
      const Real err = std::abs(seminorm(scale(f, c), idx).value - std::abs(c) * seminorm(f, idx).value);
      worst = std::max(worst, err / std::max(1.0, std::abs(c)));
      ++cases;
    }
  }
  return finish("absolute_homogeneity", cases, worst, 1e-9);
}

const std::vector<SeminormReference>& seminorm_reference_corpus() {
  static const std::vector<SeminormReference> corpus = [] {
    std::vector<SeminormReference> c;
    auto one = [&](const char* e, int a, int b) {
      c.push_back({e, SeminormIndex(MultiIndex{a}, MultiIndex{b}), 8.0, 1000001});
    };
    auto two = [&](const char* e, MultiIndex a, MultiIndex b) {
      c.push_back({e, SeminormIndex(std::move(a), std::move(b)), 2.0, 8001});
    };
    one("gauss([pi])", 0, 0);
    one("gauss([pi])", 1, 0);
    one("gauss([pi])", 0, 1);
    one("poly({[1]: 1}) * gauss([2]) + 0.5 * shift([0.7], gauss([1]))", 1, 1);
    one("mod([0.4], gauss([1.5]))", 2, 0);
    one("poly({[0]: 1, [1]: 1, [2]: -0.5}) * gauss([0.8], [0.3])", 0, 2);
    one("gauss([0.2])", 3, 0);
    two("gauss([pi, 0; 0, pi])", MultiIndex{1, 0}, MultiIndex{0, 1});
    two("shift([0.2, -0.1], gauss([1, 0.3; 0.3, 2]))", MultiIndex{0, 0}, MultiIndex{1, 0});
    two("poly({[1, 0]: 1, [0, 1]: 1i}) * gauss([1.5, 0; 0, 1])", MultiIndex{1, 1}, MultiIndex{0, 0});
    return c;
  }();
  return corpus;
}

PropertyResult seminorm_vs_dense_oracle() {
  Real worst = 0.0;
  for (const auto& ref : seminorm_reference_corpus()) {
    const auto f = std::get<SchwartzFunction>(dsl::evaluate_source(ref.expression));
    const Real value = seminorm(f, ref.index).value;
    const Real oracle = dense_sup_oracle(f, ref.index, ref.half_width, ref.points_per_axis);
    worst = std::max(worst, std::abs(value - oracle) / std::max(oracle, 1e-300));
  }
  return finish("dense_oracle_agreement", seminorm_reference_corpus().size(), worst, 1e-6);
}

PropertyResult seminorm_gaussian_moment() {
  const Real value = seminorm(gaussian(kPi), SeminormIndex(MultiIndex{1}, MultiIndex{0})).value;
  const Real expected = 1.0 / std::sqrt(2.0 * kPi * std::exp(1.0));
  return finish("gaussian_first_moment_peak", 1, std::abs(value - expected), 1e-6);
}

namespace {

std::vector<SchwartzFunction> scaled_sequence(Real (*coefficient)(int), int length) {
  std::vector<SchwartzFunction> seq;
  for (int j = 1; j <= length; ++j) seq.push_back(scale(gaussian(kPi), coefficient(j)));
  return seq;
}

}  // namespace

PropertyResult convergence_scaled_sequence() {
  const auto seq = scaled_sequence([](int j) { return 1.0 + 1.0 / j; }, 30);
  const std::vector<SeminormIndex> idx{SeminormIndex(MultiIndex{0}, MultiIndex{0})};
  const ConvergenceReport conv = check_convergence(seq, gaussian(kPi), idx, 0.05);
  const CauchyReport cauchy = check_cauchy(seq, idx, 0.05);
  const Real final_distance = conv.indices.front().distances.back();
  PropertyResult r = finish("scaled_sequence_converges", seq.size(), std::max(final_distance, cauchy.max_tail_distance),
                            0.05);
  r.passed = r.passed && conv.passed && cauchy.passed;
  return r;
}

PropertyResult divergence_detected() {
  const auto seq = scaled_sequence([](int j) { return static_cast<Real>(j); }, 30);
  const std::vector<SeminormIndex> idx{SeminormIndex(MultiIndex{0}, MultiIndex{0})};
  const ConvergenceReport conv = check_convergence(seq, gaussian(kPi), idx, 0.05);
  const CauchyReport cauchy = check_cauchy(seq, idx, 0.05);
  // Statistic: 0 when both checkers reject the sequence.
  const Real accepted = (conv.passed ? 1.0 : 0.0) + (cauchy.passed ? 1.0 : 0.0);
  return finish("divergent_sequence_rejected", seq.size(), accepted, 0.0);
}

// --- distributions ---------------------------------------------------------

namespace {

struct Fixture {
  std::vector<TemperedDistribution> distributions;
  std::vector<SchwartzFunction> tests;
};

// Base distributions of every leaf kind plus two-level compositions.
std::vector<TemperedDistribution> distribution_family(RandomCorpus& rc, std::size_t n) {
  const TemperedDistribution delta = TemperedDistribution::delta(rc.vector(n, -1.0, 1.0));
  const TemperedDistribution poly = TemperedDistribution::poly_density(rc.polynomial(n, 2, 3));
  const TemperedDistribution dens = TemperedDistribution::schwartz_density(rc.function(test_shape(n)));
  const MultiIndex alpha = MultiIndex::unit(n, 0);
  return {delta,
          poly,
          dens,
          fourier_distribution(derivative(dens, alpha)),
          derivative(fourier_distribution(delta), alpha),
          Complex(2.5) * poly + Complex(1.0, -1.0) * delta,
          fourier_distribution(fourier_distribution(poly))};
}

Fixture fixture(std::uint64_t seed, std::size_t tests) {
  RandomCorpus rc(seed);
  Fixture fx;
  for (std::size_t n : {1u, 2u}) {
    auto family = distribution_family(rc, n);
    fx.distributions.insert(fx.distributions.end(), family.begin(), family.end());
  }
  for (std::size_t k = 0; k < tests; ++k) {
    fx.tests.push_back(rc.function(test_shape(1)));
    fx.tests.push_back(rc.function(test_shape(2)));
  }
  return fx;
}

template <typename Check>
PropertyResult over_fixture(const char* name, std::uint64_t seed, std::size_t tests, Real tolerance, Check check) {
  const Fixture fx = fixture(seed, tests);
  RandomCorpus rc(seed ^ 0x9e3779b97f4a7c15ULL);
  Real worst = 0.0;
  std::size_t cases = 0;
  for (const auto& lambda : fx.distributions) {
    for (const auto& f : fx.tests) {
      if (f.dimension() != lambda.dimension()) continue;
      worst = std::max(worst, check(lambda, f, rc));
      ++cases;
    }
  }
  return finish(name, cases, worst, tolerance);
}

Real sign_of(const MultiIndex& alpha) { return alpha.degree() % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

PropertyResult distribution_derivative_sign(std::uint64_t seed, std::size_t tests) {
  return over_fixture("derivative_sign_convention", seed, tests, 1e-10,
                      [](const TemperedDistribution& lambda, const SchwartzFunction& f, RandomCorpus& rc) {
                        const MultiIndex alpha = random_index(rc, f.dimension(), 2);
                        const Complex lhs = pair(derivative(lambda, alpha), f);
                        const Complex rhs = sign_of(alpha) * pair(lambda, differentiate(f, alpha));
                        return std::abs(lhs - rhs);
                      });
}

PropertyResult distribution_integration_by_parts(std::uint64_t seed, std::size_t tests) {
  // Density kinds only: the derivative of the density must pair like the
  // distributional derivative.
  return over_fixture(
      "integration_by_parts", seed, tests, 1e-10,
      [](const TemperedDistribution& lambda, const SchwartzFunction& f, RandomCorpus& rc) -> Real {
        const MultiIndex alpha = random_index(rc, f.dimension(), 2);
        if (const auto* d = std::get_if<node::SchwartzDensity>(&lambda.node().kind)) {
          const auto classical = TemperedDistribution::schwartz_density(differentiate(d->density, alpha));
          return std::abs(pair(derivative(lambda, alpha), f) - pair(classical, f));
        }
        if (const auto* d = std::get_if<node::PolyDensity>(&lambda.node().kind)) {
          Polynomial p = d->density;
          for (std::size_t j = 0; j < alpha.dimension(); ++j) {
            for (int k = 0; k < alpha[j]; ++k) p = poly_diff(p, j);
          }
          const auto classical = TemperedDistribution::poly_density(p);
          return std::abs(pair(derivative(lambda, alpha), f) - pair(classical, f));
        }
        return 0.0;
      });
}

PropertyResult distribution_fourier_wrap(std::uint64_t seed, std::size_t tests) {
  return over_fixture("fourier_by_duality", seed, tests, 1e-10,
                      [](const TemperedDistribution& lambda, const SchwartzFunction& f, RandomCorpus&) {
                        return std::abs(pair(fourier_distribution(lambda), f) - pair(lambda, fourier(f)));
                      });
}

PropertyResult distribution_density_fourier(std::uint64_t seed, std::size_t tests) {
  RandomCorpus rc(seed);
  Real worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t n : {1u, 2u}) {
    for (int d = 0; d < 3; ++d) {
      const SchwartzFunction h = rc.function(test_shape(n));
      const auto lhs = fourier_distribution(TemperedDistribution::schwartz_density(h));
      const auto rhs = TemperedDistribution::schwartz_density(fourier(h));
      for (std::size_t k = 0; k < tests; ++k) {
        const SchwartzFunction f = rc.function(test_shape(n));
        worst = std::max(worst, std::abs(pair(lhs, f) - pair(rhs, f)));
        ++cases;
      }
    }
  }
  return finish("density_fourier_consistency", cases, worst, 1e-8);
}

PropertyResult distribution_double_transform(std::uint64_t seed, std::size_t tests) {
  return over_fixture(
      "double_transform_reflects", seed, tests, 1e-10,
      [](const TemperedDistribution& lambda, const SchwartzFunction& f, RandomCorpus&) {
        return std::abs(pair(fourier_distribution(fourier_distribution(lambda)), f) - pair(lambda, reflect(f)));
      });
}

PropertyResult distribution_linearity(std::uint64_t seed, std::size_t tests) {
  return over_fixture("linear_in_test_function", seed, tests, 1e-10,
                      [](const TemperedDistribution& lambda, const SchwartzFunction& f, RandomCorpus& rc) {
                        const SchwartzFunction g = rc.function(test_shape(f.dimension()));
                        const Complex a = rc.complex_uniform(2.0);
                        const Complex b = rc.complex_uniform(2.0);
                        const Complex lhs = pair(lambda, add(scale(f, a), scale(g, b)));
                        const Complex rhs = a * pair(lambda, f) + b * pair(lambda, g);
                        return std::abs(lhs - rhs);
                      });
}

PropertyResult continuity_delta(std::uint64_t seed, std::size_t corpus_size) {
  RandomCorpus rc(seed);
  std::vector<SchwartzFunction> corpus{gaussian(kPi)};
  for (std::size_t k = 1; k < corpus_size; ++k) corpus.push_back(rc.function(test_shape(1)));
  const auto delta = TemperedDistribution::delta(point({0.0}));
  const std::vector<SeminormIndex> idx{SeminormIndex(MultiIndex{0}, MultiIndex{0})};
  const ContinuityWitness w = find_continuity_witness(delta, corpus, idx);
  PropertyResult r = finish("delta_witness_at_most_one", corpus.size(), w.constant, 1.0 + 1e-9);
  r.passed = r.passed && witness_holds(w, delta, corpus) && w.margin >= 0.0;
  return r;
}

std::vector<SchwartzFunction> poly_density_witness_corpus() {
  std::vector<SchwartzFunction> corpus;
  for (Real a : {0.05, 0.2, 0.5, 1.0, kPi, 5.0, 12.0}) corpus.push_back(gaussian(a));
  for (Real shift : {0.5, -1.5, 3.0}) {
    corpus.push_back(translate(gaussian(1.0), point({shift})));
  }
  for (Real b : {0.25, 1.0}) corpus.push_back(modulate(gaussian(0.7), point({b})));
  corpus.push_back(poly_multiply(gaussian(1.0), Polynomial::coordinate(1, 0)));
  corpus.push_back(poly_multiply(gaussian(2.0), Polynomial(1, {{MultiIndex{0}, 1.0}, {MultiIndex{2}, -1.0}})));
  RandomCorpus rc(20);
  while (corpus.size() < 20) corpus.push_back(rc.function(test_shape(1)));
  return corpus;
}

PropertyResult continuity_poly_density() {
  const auto lambda = TemperedDistribution::poly_density(Polynomial::constant(1, 1.0));
  const std::vector<SeminormIndex> idx{SeminormIndex(MultiIndex{0}, MultiIndex{0}),
                                       SeminormIndex(MultiIndex{2}, MultiIndex{0})};
  const auto corpus = poly_density_witness_corpus();
  const ContinuityWitness w = find_continuity_witness(lambda, corpus, idx);
  PropertyResult r = finish("poly_density_witness_at_most_pi", corpus.size(), w.constant, kPi + 1e-6);
  r.passed = r.passed && witness_holds(w, lambda, corpus) && w.margin >= 0.0;
  return r;
}

// --- DSL -------------------------------------------------------------------

const std::vector<std::string>& dsl_corpus() {
  static const std::vector<std::string> corpus{
      "gauss([pi])",
      "gauss([1])",
      "gauss([2, 0.5; 0.5, 1])",
      "gauss([1], [(0.5+1i)])",
      "zero(1)",
      "zero(2)",
      "gauss([pi]) + gauss([pi])",
      "2 * gauss([1]) - gauss([3])",
      "(1+2i) * gauss([1.5])",
      "poly({[1]: 1}) * gauss([pi])",
      "poly({[0, 0]: 1, [1, 1]: -0.5, [0, 2]: 2i}) * gauss([1, 0; 0, 2])",
      "shift([1], gauss([pi]))",
      "shift([0.3, -0.7], gauss([1, 0.2; 0.2, 1]))",
      "mod([0.5], gauss([1]))",
      "mod([1, -1], gauss([2, 0; 0, 2]))",
      "diff([1], gauss([pi]))",
      "diff([2, 1], gauss([1, 0.1; 0.1, 1.5]))",
      "ft(gauss([3.14159265358979]))",
      "ft(shift([1], gauss([pi])))",
      "ift(ft(gauss([pi])))",
      "conv(gauss([1]), gauss([1]))",
      "conv(poly({[1]: 1}) * gauss([2]), mod([0.25], gauss([1])))",
      "gauss([1]) * gauss([2])",
      "ft(poly({[3]: 1}) * gauss([0.7], [0.2]))",
      "delta([0])",
      "dft(delta([0]))",
      "dderiv([1], delta([0.5]))",
      "polydensity(poly({[0]: 1, [2]: 1}))",
      "density(gauss([pi, 0; 0, 1])) + 2 * dft(dderiv([1, 0], delta([0, 1])))",
      "-(1-1i) * density(shift([0.5], gauss([1])))",
  };
  return corpus;
}

PropertyResult dsl_roundtrip() {
  Real worst = 0.0;
  for (const auto& src : dsl_corpus()) {
    const dsl::Value v = dsl::evaluate_source(src);
    const dsl::Value back = dsl::evaluate_source(dsl::format(v));
    worst = std::max(worst, dsl::value_distance(v, back));
  }
  return finish("dsl_format_roundtrip", dsl_corpus().size(), worst, 1e-12);
}

// --- suites ----------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"roundtrip", "convolution", "exchange", "oracle", "seminorm", "duality"};
  return names;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed) {
  SuiteResult s{std::string(name), {}};
  auto& p = s.properties;
  if (name == "roundtrip") {
    p.push_back(inversion_roundtrip(seed, 50, false));
    p.push_back(inversion_roundtrip(seed + 1, 50, true));
    p.push_back(dsl_roundtrip());
  } else if (name == "convolution") {
    p.push_back(convolution_vs_quadrature(seed, 10, 5));
    p.push_back(convolution_closed_form());
    p.push_back(convolution_commutes(seed + 1, 10));
  } else if (name == "exchange") {
    p.push_back(exchange_polynomial_to_derivative(seed, 25));
    p.push_back(exchange_derivative_to_polynomial(seed + 1, 25));
  } else if (name == "oracle") {
    p.push_back(fourier_vs_quadrature(seed, 20, 10));
    p.push_back(fourier_linearity(seed + 1, 20));
  } else if (name == "seminorm") {
    p.push_back(seminorm_triangle(seed, 25));
    p.push_back(seminorm_homogeneity(seed + 1, 25));
    p.push_back(seminorm_vs_dense_oracle());
    p.push_back(seminorm_gaussian_moment());
    p.push_back(convergence_scaled_sequence());
    p.push_back(divergence_detected());
  } else if (name == "duality") {
    p.push_back(distribution_derivative_sign(seed, 10));
    p.push_back(distribution_integration_by_parts(seed + 1, 10));
    p.push_back(distribution_fourier_wrap(seed + 2, 10));
    p.push_back(distribution_density_fourier(seed + 3, 10));
    p.push_back(distribution_double_transform(seed + 4, 10));
    p.push_back(distribution_linearity(seed + 5, 10));
    p.push_back(continuity_delta(seed + 6, 20));
    p.push_back(continuity_poly_density());
  } else {
    throw Error("unknown verification suite '" + std::string(name) + "'");
  }
  return s;
}

}  // namespace schwartz::verify
