// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit if any fails.
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "schwartz/calculus.hpp"
#include "schwartz/distribution.hpp"
#include "schwartz/random.hpp"
#include "schwartz/verify.hpp"

using namespace schwartz;
using verify::PropertyResult;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<PropertyResult> properties;
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& p : properties)
      if (!p.passed) return false;
    return true;
  }
};

PropertyResult check(std::string name, bool ok, Real worst = 0.0, Real tolerance = 0.0) {
  return PropertyResult{std::move(name), 1, worst, tolerance, ok};
}

Criterion roundtrip() {
  return {1,
          "inversion round trip",
          {verify::inversion_roundtrip(7, 50, false), verify::inversion_roundtrip(8, 50, true)},
          {}};
}

Criterion convolution() {
  return {2, "convolution theorem", {verify::convolution_vs_quadrature(7, 10, 5), verify::convolution_closed_form()}, {}};
}

Criterion exchange() {
  return {3,
          "exchange identities",
          {verify::exchange_polynomial_to_derivative(7, 25), verify::exchange_derivative_to_polynomial(8, 25)},
          {}};
}

Criterion oracle() { return {4, "oracle agreement", {verify::fourier_vs_quadrature(7, 20, 10)}, {}}; }

Criterion seminorm_axioms() {
  return {5,
          "seminorm axioms",
          {verify::seminorm_triangle(7, 25), verify::seminorm_homogeneity(8, 25), verify::seminorm_vs_dense_oracle(),
           verify::seminorm_gaussian_moment()},
          {}};
}

Criterion convergence() {
  const SchwartzFunction g = gaussian(kPi);
  const std::vector<SeminormIndex> idx{SeminormIndex(MultiIndex{0}, MultiIndex{0})};
  std::vector<SchwartzFunction> scaled, growing;
  for (int j = 1; j <= 30; ++j) {
    scaled.push_back(scale(g, 1.0 + 1.0 / j));
    growing.push_back(scale(g, static_cast<Real>(j)));
  }
  const ConvergenceReport conv = check_convergence(scaled, g, idx, 0.05);
  const CauchyReport cauchy = check_cauchy(scaled, idx, 0.05);
  const ConvergenceReport div = check_convergence(growing, g, idx, 0.05);
  const CauchyReport div_cauchy = check_cauchy(growing, idx, 0.05);
  Criterion c{6, "convergence and Cauchy", {}, {}};
  c.properties.push_back(check("scaled_converges", conv.passed, conv.indices[0].distances.back(), 0.05));
  c.properties.push_back(check("scaled_cauchy", cauchy.passed, cauchy.max_tail_distance, 0.05));
  c.properties.push_back(check("growing_not_convergent", !div.passed, div.indices[0].distances.back(), 0.05));
  c.properties.push_back(check("growing_not_cauchy", !div_cauchy.passed, div_cauchy.max_tail_distance, 0.05));
  return c;
}

Criterion duality() {
  return {7,
          "distribution duality",
          {verify::distribution_derivative_sign(7, 10), verify::distribution_integration_by_parts(8, 10),
           verify::distribution_fourier_wrap(9, 10), verify::distribution_density_fourier(10, 10),
           verify::distribution_double_transform(11, 10), verify::distribution_linearity(12, 10)},
          {}};
}

Criterion continuity() {
  Criterion c{8, "continuity witness", {}, {}};
  // several corpora for the point mass
  for (std::uint64_t seed : {7u, 19u, 101u}) c.properties.push_back(verify::continuity_delta(seed, 20));
  {
    RandomCorpus rc(5);
    CorpusShape s;
    s.dimension = 1;
    std::vector<SchwartzFunction> corpus;
    for (int k = 0; k < 15; ++k) corpus.push_back(rc.function(s));
    const auto d0 = TemperedDistribution::delta(RealVector::Zero(1));
    const ContinuityWitness w =
        find_continuity_witness(d0, corpus, {SeminormIndex(MultiIndex{0}, MultiIndex{0})});
    c.properties.push_back(check("delta_witness_without_peak", w.constant <= 1.0 + 1e-9 && witness_holds(w, d0, corpus),
                                 w.constant, 1.0 + 1e-9));
  }
  const PropertyResult poly = verify::continuity_poly_density();
  char buf[96];
  std::snprintf(buf, sizeof buf, "poly-density C = %.12g", poly.worst);
  c.notes.emplace_back(buf);
  c.properties.push_back(poly);
  return c;
}

Criterion determinism() {
  Criterion c{9, "CLI determinism and DSL round trip", {}, {}};
  std::ostringstream out1, err1, out2, err2;
  const int code1 = cli::run({"verify", "all", "--seed", "7"}, out1, err1);
  const int code2 = cli::run({"verify", "all", "--seed", "7"}, out2, err2);
  c.properties.push_back(check("verify_all_passes", code1 == 0 && code2 == 0));
  c.properties.push_back(check("reports_byte_identical", out1.str() == out2.str() && !out1.str().empty()));
  const std::size_t suites = verify::suite_names().size();
  c.properties.push_back(check("at_least_five_suites", suites >= 5, static_cast<Real>(suites), 5.0));
  c.properties.push_back(verify::dsl_roundtrip());
  return c;
}

}  // namespace

int main() {
  using Builder = Criterion (*)();
  const Builder builders[] = {roundtrip, convolution, exchange,    oracle,     seminorm_axioms,
                              convergence, duality,   continuity,  determinism};
  int failures = 0;
  for (Builder build : builders) {
    Criterion c;
    try {
      c = build();
    } catch (const std::exception& e) {
      c.properties.push_back(check(std::string("exception: ") + e.what(), false));
    }
    const bool ok = c.passed();
    failures += ok ? 0 : 1;
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str());
    for (const auto& p : c.properties) {
      std::printf("    %-4s %-36s cases=%-4zu worst=%-12.4g tol=%.4g\n", p.passed ? "ok" : "FAIL", p.name.c_str(),
                  p.cases, p.worst, p.tolerance);
    }
    for (const auto& n : c.notes) std::printf("    note: %s\n", n.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(builders)) - failures, std::size(builders));
  return failures == 0 ? 0 : 1;
}
