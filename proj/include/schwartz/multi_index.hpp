#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "schwartz/types.hpp"

namespace schwartz {

/// Exponent vector of non-negative integers. Ordered graded-lexicographically:
/// first by degree, then lexicographically by exponents.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dimension) : exponents_(dimension, 0) {}
  MultiIndex(std::initializer_list<int> exponents) : MultiIndex(std::vector<int>(exponents)) {}
  explicit MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw DimensionError("MultiIndex: dimension must be at least 1");
    for (int e : exponents_) {
      if (e < 0) throw Error("MultiIndex: exponents must be non-negative");
    }
  }

  static MultiIndex zero(std::size_t dimension) { return MultiIndex(dimension); }
  static MultiIndex unit(std::size_t dimension, std::size_t axis) {
    MultiIndex m(dimension);
    m.exponents_.at(axis) = 1;
    return m;
  }

  std::size_t dimension() const { return exponents_.size(); }
  int operator[](std::size_t j) const { return exponents_[j]; }
  const std::vector<int>& exponents() const { return exponents_; }

  int degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }
  bool is_zero() const { return degree() == 0; }

  MultiIndex operator+(const MultiIndex& other) const {
    require_dimension(dimension(), other.dimension(), "MultiIndex::operator+");
    MultiIndex out = *this;
    for (std::size_t j = 0; j < exponents_.size(); ++j) out.exponents_[j] += other.exponents_[j];
    return out;
  }

  MultiIndex with(std::size_t axis, int exponent) const {
    MultiIndex out = *this;
    out.exponents_.at(axis) = exponent;
    return out;
  }

  bool operator==(const MultiIndex& other) const = default;

  std::strong_ordering operator<=>(const MultiIndex& other) const {
    if (auto d = degree() <=> other.degree(); d != 0) return d;
    return exponents_ <=> other.exponents_;
  }

 private:
  std::vector<int> exponents_;
};

inline int degree(const MultiIndex& alpha) { return alpha.degree(); }

}  // namespace schwartz
