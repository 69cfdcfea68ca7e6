#include "schwartz/oracle.hpp"

#include <cmath>

namespace schwartz {

namespace detail {

Complex pairwise_sum(std::vector<Complex> values) {
  if (values.empty()) return 0.0;
  while (values.size() > 1) {
    std::vector<Complex> next((values.size() + 1) / 2);
    for (std::size_t k = 0; k + 1 < values.size(); k += 2) next[k / 2] = values[k] + values[k + 1];
    if (values.size() % 2 == 1) next.back() = values.back();
    values = std::move(next);
  }
  return values.front();
}

}  // namespace detail

Complex numeric_ft_oracle(const SchwartzFunction& f, const RealVector& xi, Real half_width, int points_per_axis) {
  require_dimension(f.dimension(), static_cast<std::size_t>(xi.size()), "numeric_ft_oracle");
  if (f.is_zero()) return 0.0;
  const FunctionEvaluator eval(f);
  return trapezoid_cube(
      [&](const RealVector& x) {
        const Real phase = -2.0 * kPi * xi.dot(x);
        return eval(x) * Complex(std::cos(phase), std::sin(phase));
      },
      f.dimension(), half_width, points_per_axis);
}

Complex numeric_conv_oracle(const SchwartzFunction& f, const SchwartzFunction& g, const RealVector& x,
                            Real half_width, int points_per_axis) {
  require_dimension(f.dimension(), g.dimension(), "numeric_conv_oracle");
  require_dimension(f.dimension(), static_cast<std::size_t>(x.size()), "numeric_conv_oracle");
  if (f.is_zero() || g.is_zero()) return 0.0;
  const FunctionEvaluator ef(f);
  const FunctionEvaluator eg(g);
  return trapezoid_cube(
      [&](const RealVector& y) {
        const RealVector shifted = x - y;
        return ef(y) * eg(shifted);
      },
      f.dimension(), half_width, points_per_axis);
}

Real dense_sup_oracle(const SchwartzFunction& f, const SeminormIndex& idx, Real half_width, int points_per_axis) {
  const SchwartzFunction g = seminorm_target(f, idx);
  if (g.is_zero()) return 0.0;
  if (points_per_axis < 2) throw Error("dense_sup_oracle: points_per_axis must be at least 2");
  const FunctionEvaluator eval(g);
  const std::size_t n = f.dimension();
  const Real h = 2.0 * half_width / (points_per_axis - 1);
  std::vector<int> counter(n, 0);
  std::vector<Real> x(n, -half_width);
  Real best = 0.0;
  while (true) {
    best = std::max(best, std::abs(eval(x.data())));
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++counter[j] < points_per_axis) {
        x[j] = -half_width + h * counter[j];
        break;
      }
      counter[j] = 0;
      x[j] = -half_width;
      if (j == 0) return best;
    }
  }
}

}  // namespace schwartz
