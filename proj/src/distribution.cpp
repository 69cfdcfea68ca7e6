#include "schwartz/distribution.hpp"

#include <cmath>
#include <limits>

#include "schwartz/calculus.hpp"
#include "schwartz/fourier.hpp"

namespace schwartz {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

TemperedDistribution make(std::size_t n, auto kind) {
  return TemperedDistribution(std::make_shared<const DistributionNode>(DistributionNode{n, std::move(kind)}));
}

Complex pair_node(const DistributionNode& node, const SchwartzFunction& f) {
  return std::visit(
      overloaded{
          [&](const node::Delta& d) { return evaluate(f, d.point); },
          [&](const node::PolyDensity& d) { return integrate(poly_multiply(f, d.density)); },
          [&](const node::SchwartzDensity& d) { return integrate(multiply(d.density, f)); },
          [&](const node::Sum& s) { return pair_node(*s.left, f) + pair_node(*s.right, f); },
          [&](const node::Scale& s) { return s.factor * pair_node(*s.child, f); },
          [&](const node::Derivative& d) {
            const Real sign = d.alpha.degree() % 2 == 0 ? 1.0 : -1.0;
            return sign * pair_node(*d.child, differentiate(f, d.alpha));
          },
          [&](const node::FourierWrap& w) { return pair_node(*w.child, fourier(f)); },
      },
      node.kind);
}

}  // namespace

TemperedDistribution::TemperedDistribution(DistributionNodePtr node) : node_(std::move(node)) {
  if (!node_) throw Error("TemperedDistribution: null node");
}

TemperedDistribution TemperedDistribution::delta(RealVector point) {
  const auto n = static_cast<std::size_t>(point.size());
  if (n == 0) throw DimensionError("delta: dimension must be at least 1");
  return make(n, node::Delta{std::move(point)});
}

TemperedDistribution TemperedDistribution::poly_density(Polynomial p) {
  const std::size_t n = p.dimension();
  return make(n, node::PolyDensity{std::move(p)});
}

TemperedDistribution TemperedDistribution::schwartz_density(SchwartzFunction h) {
  const std::size_t n = h.dimension();
  return make(n, node::SchwartzDensity{std::move(h)});
}

TemperedDistribution TemperedDistribution::zero(std::size_t dimension) { return poly_density(Polynomial(dimension)); }

TemperedDistribution TemperedDistribution::operator+(const TemperedDistribution& other) const {
  require_dimension(dimension(), other.dimension(), "distribution sum");
  return make(dimension(), node::Sum{node_, other.node_});
}

TemperedDistribution TemperedDistribution::operator-(const TemperedDistribution& other) const {
  return *this + Complex(-1.0) * other;
}

TemperedDistribution operator*(Complex s, const TemperedDistribution& d) {
  return make(d.dimension(), node::Scale{s, d.node_ptr()});
}

Complex pair(const TemperedDistribution& lambda, const SchwartzFunction& f) {
  require_dimension(lambda.dimension(), f.dimension(), "pair");
  return pair_node(lambda.node(), f);
}

TemperedDistribution derivative(const TemperedDistribution& lambda, const MultiIndex& alpha) {
  require_dimension(lambda.dimension(), alpha.dimension(), "derivative");
  if (alpha.is_zero()) return lambda;
  if (const auto* inner = std::get_if<node::Derivative>(&lambda.node().kind)) {
    return make(lambda.dimension(), node::Derivative{inner->alpha + alpha, inner->child});
  }
  return make(lambda.dimension(), node::Derivative{alpha, lambda.node_ptr()});
}

TemperedDistribution fourier_distribution(const TemperedDistribution& lambda) {
  return make(lambda.dimension(), node::FourierWrap{lambda.node_ptr()});
}

namespace {

Real seminorm_sum(const SchwartzFunction& f, const std::vector<SeminormIndex>& indices) {
  Real s = 0.0;
  for (const auto& idx : indices) s += seminorm(f, idx).value;
  return s;
}

}  // namespace

ContinuityWitness find_continuity_witness(const TemperedDistribution& lambda,
                                          const std::vector<SchwartzFunction>& corpus,
                                          const std::vector<SeminormIndex>& candidate_indices) {
  if (corpus.empty()) throw Error("find_continuity_witness: empty corpus");
  if (candidate_indices.empty()) throw Error("find_continuity_witness: no candidate indices");
  std::vector<std::pair<Real, Real>> samples;  // (|lambda(f)|, sum of seminorms)
  Real constant = 0.0;
  for (const auto& f : corpus) {
    const Real value = std::abs(pair(lambda, f));
    const Real bound = seminorm_sum(f, candidate_indices);
    if (bound == 0.0) {
      if (value != 0.0) {
        throw Error("find_continuity_witness: seminorm sum vanishes on a function with nonzero pairing; "
                    "the candidate indices cannot witness continuity on this corpus");
      }
      continue;
    }
    constant = std::max(constant, value / bound);
    samples.emplace_back(value, bound);
  }
  constant = std::max(constant, std::numeric_limits<Real>::min());

  ContinuityWitness witness{constant, candidate_indices, std::numeric_limits<Real>::infinity()};
  Real largest = 0.0;
  for (const auto& [value, bound] : samples) {
    witness.margin = std::min(witness.margin, constant * bound - value);
    largest = std::max(largest, value);
  }
  if (samples.empty()) witness.margin = 0.0;
  // The maximizing sample attains zero margin up to one rounding of C * bound.
  if (witness.margin < 0.0 && witness.margin >= -4.0 * std::numeric_limits<Real>::epsilon() * largest) {
    witness.margin = 0.0;
  }
  return witness;
}

bool witness_holds(const ContinuityWitness& witness, const TemperedDistribution& lambda,
                   const std::vector<SchwartzFunction>& corpus) {
  for (const auto& f : corpus) {
    const Real value = std::abs(pair(lambda, f));
    const Real bound = witness.constant * seminorm_sum(f, witness.indices);
    if (value > bound * (1.0 + 1e-12)) return false;
  }
  return true;
}

}  // namespace schwartz
