#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "schwartz/atom.hpp"
#include "schwartz/seminorm.hpp"

namespace schwartz {

struct DistributionNode;
using DistributionNodePtr = std::shared_ptr<const DistributionNode>;

namespace node {

/// f -> f(point)
struct Delta {
  RealVector point;
};
/// f -> int f p
struct PolyDensity {
  Polynomial density;
};
/// f -> int f h
struct SchwartzDensity {
  SchwartzFunction density;
};
struct Sum {
  DistributionNodePtr left, right;
};
struct Scale {
  Complex factor;
  DistributionNodePtr child;
};
/// f -> (-1)^{|alpha|} child(d^alpha f)
struct Derivative {
  MultiIndex alpha;
  DistributionNodePtr child;
};
/// f -> child(f^)
struct FourierWrap {
  DistributionNodePtr child;
};

}  // namespace node

struct DistributionNode {
  std::size_t dimension;
  std::variant<node::Delta, node::PolyDensity, node::SchwartzDensity, node::Sum, node::Scale, node::Derivative,
               node::FourierWrap>
      kind;
};

/// Immutable expression tree of a tempered distribution; children are shared.
class TemperedDistribution {
 public:
  explicit TemperedDistribution(DistributionNodePtr node);

  static TemperedDistribution delta(RealVector point);
  static TemperedDistribution poly_density(Polynomial p);
  static TemperedDistribution schwartz_density(SchwartzFunction h);
  /// The zero functional, represented as the zero polynomial density.
  static TemperedDistribution zero(std::size_t dimension);

  std::size_t dimension() const { return node_->dimension; }
  const DistributionNode& node() const { return *node_; }
  const DistributionNodePtr& node_ptr() const { return node_; }

  TemperedDistribution operator+(const TemperedDistribution& other) const;
  TemperedDistribution operator-(const TemperedDistribution& other) const;

 private:
  DistributionNodePtr node_;
};

TemperedDistribution operator*(Complex s, const TemperedDistribution& d);

Complex pair(const TemperedDistribution& lambda, const SchwartzFunction& f);

/// Wraps in a Derivative node; nested derivatives fuse by index addition and
/// the zero index is the identity.
TemperedDistribution derivative(const TemperedDistribution& lambda, const MultiIndex& alpha);

/// lambda^(f) = lambda(f^).
TemperedDistribution fourier_distribution(const TemperedDistribution& lambda);

/// Empirical continuity constant over a corpus:
///   |lambda(f)| <= C sum_j ||f||_{alpha_j, beta_j}   for every corpus f.
struct ContinuityWitness {
  Real constant = 0.0;
  std::vector<SeminormIndex> indices;
  /// min over the corpus of C sum ||f|| - |lambda(f)|.
  Real margin = 0.0;
};

/// C is the largest ratio |lambda(f)| / sum ||f|| over the corpus. Throws
/// Error on an empty corpus, or when some f has vanishing seminorm sum but
/// lambda(f) != 0.
ContinuityWitness find_continuity_witness(const TemperedDistribution& lambda,
                                          const std::vector<SchwartzFunction>& corpus,
                                          const std::vector<SeminormIndex>& candidate_indices);

/// Re-checks the stored inequality on a corpus (relative slack 1e-12).
bool witness_holds(const ContinuityWitness& witness, const TemperedDistribution& lambda,
                   const std::vector<SchwartzFunction>& corpus);

}  // namespace schwartz
