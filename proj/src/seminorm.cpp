#include "schwartz/seminorm.hpp"

#include <cmath>

#include "schwartz/calculus.hpp"

namespace schwartz {

namespace {

struct GridMax {
  Real value = -1.0;
  RealVector point;
};

// Row-major scan of a (points)^n grid on the box center +- half; the first
// maximum encountered wins, giving a lexicographic tie-break.
GridMax grid_max(const FunctionEvaluator& g, const RealVector& center, Real half, int points) {
  const auto n = center.size();
  const Real step = 2.0 * half / (points - 1);
  std::vector<int> counter(static_cast<std::size_t>(n), 0);
  RealVector x(n);
  GridMax best;
  best.point = center;
  while (true) {
    for (Eigen::Index j = 0; j < n; ++j) x[j] = center[j] - half + step * counter[static_cast<std::size_t>(j)];
    const Real v = std::abs(g(x));
    if (v > best.value) {
      best.value = v;
      best.point = x;
    }
    Eigen::Index j = n - 1;
    while (j >= 0 && ++counter[static_cast<std::size_t>(j)] == points) counter[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
  }
  return best;
}

}  // namespace

SchwartzFunction seminorm_target(const SchwartzFunction& f, const SeminormIndex& idx) {
  require_dimension(f.dimension(), idx.dimension(), "seminorm");
  return poly_multiply(differentiate(f, idx.beta), Polynomial::monomial(idx.alpha));
}

Real gaussian_tail_bound(const SchwartzFunction& g, Real r) {
  r = std::max(r, 1.0);
  Real total = 0.0;
  for (const auto& atom : g.atoms()) {
    const Real lambda = atom.min_eigenvalue();
    const Real gamma = atom.linear().real().norm();
    const Real degree = atom.polynomial().total_degree();
    // |P(x)| <= sum|coeff| |x|^deg for |x| >= 1; the envelope
    // r^deg exp(-lambda r^2 + gamma r) decreases beyond its mode.
    const Real mode = (gamma + std::sqrt(gamma * gamma + 8.0 * lambda * degree)) / (4.0 * lambda);
    const Real s = std::max(r, mode);
    total += atom.polynomial().coefficient_l1() * std::exp(degree * std::log(s) - lambda * s * s + gamma * s);
  }
  return total;
}

SeminormResult seminorm(const SchwartzFunction& f, const SeminormIndex& idx, const SeminormOptions& options) {
  const SchwartzFunction g = seminorm_target(f, idx);
  const auto n = static_cast<Eigen::Index>(f.dimension());
  SeminormResult result;
  result.witness = RealVector::Zero(n);
  if (g.is_zero()) return result;

  const FunctionEvaluator eval(g);
  const RealVector origin = RealVector::Zero(n);
  Real radius = 1.0;
  GridMax best;
  Real tail = 0.0;
  for (int attempt = 0;; ++attempt) {
    best = grid_max(eval, origin, radius, options.points_per_axis);
    tail = gaussian_tail_bound(g, radius);
    if (tail < options.tail_ratio * std::max(best.value, 1e-300)) break;
    if (attempt == 64) throw DomainError("seminorm: tail bound did not converge");
    radius *= 2.0;
  }

  Real half = radius;
  for (int round = 0; round < options.refinement_rounds; ++round) {
    half /= options.zoom_factor;
    const GridMax local = grid_max(eval, best.point, half, options.points_per_axis);
    if (local.value > best.value) best = local;
  }

  result.value = best.value;
  result.witness = best.point;
  result.tail_radius = radius;
  result.tail_bound = tail;
  return result;
}

Real seminorm_distance(const SchwartzFunction& f, const SchwartzFunction& g, const SeminormIndex& idx,
                       const SeminormOptions& options) {
  return seminorm(subtract(f, g), idx, options).value;
}

namespace {

std::size_t tail_length(std::size_t len) { return std::max<std::size_t>(2, (len + 3) / 4); }

}  // namespace

ConvergenceReport check_convergence(const std::vector<SchwartzFunction>& seq, const SchwartzFunction& limit,
                                    const std::vector<SeminormIndex>& indices, Real tol) {
  if (seq.empty()) throw Error("check_convergence: empty sequence");
  ConvergenceReport report;
  report.passed = true;
  const std::size_t tail_start = seq.size() - std::min(seq.size(), tail_length(seq.size()));
  for (const auto& idx : indices) {
    IndexConvergence entry{idx, {}, true, false};
    for (const auto& f : seq) entry.distances.push_back(seminorm_distance(f, limit, idx));
    for (std::size_t k = tail_start + 1; k < entry.distances.size(); ++k) {
      if (entry.distances[k] > entry.distances[k - 1] + 1e-12) entry.monotone_tail = false;
    }
    entry.passed = entry.distances.back() <= tol;
    report.passed = report.passed && entry.passed;
    report.indices.push_back(std::move(entry));
  }
  return report;
}

CauchyReport check_cauchy(const std::vector<SchwartzFunction>& seq, const std::vector<SeminormIndex>& indices,
                          Real tol) {
  if (seq.size() < 2) throw Error("check_cauchy: sequence needs at least two terms");
  CauchyReport report;
  report.tail_length = tail_length(seq.size());
  const std::size_t start = seq.size() - report.tail_length;
  for (const auto& idx : indices) {
    for (std::size_t j = start; j < seq.size(); ++j) {
      for (std::size_t l = j + 1; l < seq.size(); ++l) {
        report.max_tail_distance = std::max(report.max_tail_distance, seminorm_distance(seq[j], seq[l], idx));
      }
    }
  }
  report.passed = report.max_tail_distance <= tol;
  return report;
}

}  // namespace schwartz
