#include "schwartz/polynomial.hpp"

#include <cmath>
#include <string>

namespace schwartz {

namespace {

Real binomial(int n, int k) {
  Real r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Polynomial::Polynomial(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw DimensionError("Polynomial: dimension must be at least 1");
}

Polynomial::Polynomial(std::size_t dimension, Terms terms) : Polynomial(dimension) {
  for (const auto& [alpha, coeff] : terms) {
    require_dimension(dimension_, alpha.dimension(), "Polynomial");
  }
  terms_ = std::move(terms);
  prune();
}

Polynomial Polynomial::constant(std::size_t dimension, Complex value) {
  return Polynomial(dimension, {{MultiIndex::zero(dimension), value}});
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, Complex coefficient) {
  return Polynomial(alpha.dimension(), {{alpha, coefficient}});
}

Polynomial Polynomial::coordinate(std::size_t dimension, std::size_t axis) {
  if (axis >= dimension) throw DimensionError("Polynomial::coordinate: axis out of range");
  return monomial(MultiIndex::unit(dimension, axis));
}

void Polynomial::prune() {
  std::erase_if(terms_, [](const auto& t) { return std::abs(t.second) <= kCoefficientDropTolerance; });
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [alpha, coeff] : terms_) d = std::max(d, alpha.degree());
  return d;
}

Complex Polynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

Real Polynomial::coefficient_l1() const {
  Real s = 0.0;
  for (const auto& [alpha, coeff] : terms_) s += std::abs(coeff);
  return s;
}

Complex Polynomial::operator()(const RealVector& x) const {
  require_dimension(dimension_, static_cast<std::size_t>(x.size()), "Polynomial evaluation");
  Complex sum = 0.0;
  for (const auto& [alpha, coeff] : terms_) {
    Real m = 1.0;
    for (std::size_t j = 0; j < dimension_; ++j) {
      for (int e = 0; e < alpha[j]; ++e) m *= x[j];
    }
    sum += coeff * m;
  }
  return sum;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_dimension(dimension_, other.dimension_, "Polynomial addition");
  Terms out = terms_;
  for (const auto& [alpha, coeff] : other.terms_) out[alpha] += coeff;
  return Polynomial(dimension_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const { return poly_mul(*this, other); }

Polynomial Polynomial::operator*(Complex s) const {
  Terms out;
  for (const auto& [alpha, coeff] : terms_) out.emplace(alpha, coeff * s);
  return Polynomial(dimension_, std::move(out));
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  require_dimension(p.dimension(), q.dimension(), "poly_mul");
  Polynomial::Terms out;
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) out[a + b] += ca * cb;
  }
  return Polynomial(p.dimension(), std::move(out));
}

Polynomial poly_diff(const Polynomial& p, std::size_t axis) {
  if (axis >= p.dimension()) {
    throw DimensionError("poly_diff: axis " + std::to_string(axis) + " out of range");
  }
  Polynomial::Terms out;
  for (const auto& [alpha, coeff] : p.terms()) {
    int e = alpha[axis];
    if (e == 0) continue;
    out[alpha.with(axis, e - 1)] += coeff * Real(e);
  }
  return Polynomial(p.dimension(), std::move(out));
}

Polynomial poly_shift(const Polynomial& p, const RealVector& shift) {
  require_dimension(p.dimension(), static_cast<std::size_t>(shift.size()), "poly_shift");
  const std::size_t n = p.dimension();
  Polynomial::Terms out;
  for (const auto& [alpha, coeff] : p.terms()) {
    // prod_j (x_j - a_j)^{alpha_j}, expanded axis by axis.
    Polynomial::Terms acc{{MultiIndex::zero(n), coeff}};
    for (std::size_t j = 0; j < n; ++j) {
      const int e = alpha[j];
      if (e == 0) continue;
      Polynomial::Terms next;
      for (const auto& [beta, cb] : acc) {
        for (int k = 0; k <= e; ++k) {
          Real w = binomial(e, k) * std::pow(-shift[j], e - k);
          next[beta.with(j, beta[j] + k)] += cb * w;
        }
      }
      acc = std::move(next);
    }
    for (const auto& [beta, cb] : acc) out[beta] += cb;
  }
  return Polynomial(n, std::move(out));
}

Polynomial poly_reflect(const Polynomial& p) {
  Polynomial::Terms out;
  for (const auto& [alpha, coeff] : p.terms()) {
    out.emplace(alpha, alpha.degree() % 2 == 0 ? coeff : -coeff);
  }
  return Polynomial(p.dimension(), std::move(out));
}

Real coefficient_distance(const Polynomial& p, const Polynomial& q) {
  require_dimension(p.dimension(), q.dimension(), "coefficient_distance");
  Real d = 0.0;
  for (const auto& [alpha, coeff] : p.terms()) d = std::max(d, std::abs(coeff - q.coefficient(alpha)));
  for (const auto& [alpha, coeff] : q.terms()) {
    if (!p.terms().contains(alpha)) d = std::max(d, std::abs(coeff));
  }
  return d;
}

}  // namespace schwartz
