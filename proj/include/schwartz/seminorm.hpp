#pragma once

#include <vector>

#include "schwartz/atom.hpp"

namespace schwartz {

/// The pair (alpha, beta) selecting sup |x^alpha d^beta f|.
struct SeminormIndex {
  MultiIndex alpha;
  MultiIndex beta;

  SeminormIndex(MultiIndex a, MultiIndex b) : alpha(std::move(a)), beta(std::move(b)) {
    require_dimension(alpha.dimension(), beta.dimension(), "SeminormIndex");
  }
  std::size_t dimension() const { return alpha.dimension(); }
};

struct SeminormResult {
  Real value = 0.0;
  RealVector witness;
  Real tail_radius = 1.0;
  /// Certified bound on sup |g| outside [-tail_radius, tail_radius]^n.
  Real tail_bound = 0.0;
};

/// Grid-search settings. The defaults resolve every atom admitted by the
/// eigenvalue floor.
struct SeminormOptions {
  int points_per_axis = 64;
  int refinement_rounds = 5;
  Real zoom_factor = 10.0;
  Real tail_ratio = 1e-3;
};

/// x^alpha d^beta f, built symbolically.
SchwartzFunction seminorm_target(const SchwartzFunction& f, const SeminormIndex& idx);

/// Upper bound on sup_{|x| > r} |g(x)| from the atom-wise Gaussian envelope.
Real gaussian_tail_bound(const SchwartzFunction& g, Real r);

SeminormResult seminorm(const SchwartzFunction& f, const SeminormIndex& idx,
                        const SeminormOptions& options = {});

Real seminorm_distance(const SchwartzFunction& f, const SchwartzFunction& g, const SeminormIndex& idx,
                       const SeminormOptions& options = {});

struct IndexConvergence {
  SeminormIndex index;
  std::vector<Real> distances;
  /// Distances are non-increasing over the last ceil(len/4) terms.
  bool monotone_tail = false;
  bool passed = false;
};

struct ConvergenceReport {
  std::vector<IndexConvergence> indices;
  bool passed = false;
};

/// Throws Error on an empty sequence.
ConvergenceReport check_convergence(const std::vector<SchwartzFunction>& seq, const SchwartzFunction& limit,
                                    const std::vector<SeminormIndex>& indices, Real tol);

struct CauchyReport {
  /// Largest pairwise distance within the tail window, over all indices.
  Real max_tail_distance = 0.0;
  std::size_t tail_length = 0;
  bool passed = false;
};

/// The tail window is the last max(2, ceil(len/4)) terms; every pair inside
/// it must be within tol. Throws Error if the sequence has fewer than 2 terms.
CauchyReport check_cauchy(const std::vector<SchwartzFunction>& seq, const std::vector<SeminormIndex>& indices,
                          Real tol);

}  // namespace schwartz
