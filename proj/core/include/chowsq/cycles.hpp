#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chowsq/error.hpp"
#include "chowsq/rational.hpp"

namespace chowsq {

/// Per-dimension coefficient vectors over a fixed Chow basis.
/// `shape()[k]` is the number of basis elements in dimension k.
template <class Scalar>
class GradedVector {
 public:
  GradedVector() = default;
  explicit GradedVector(const std::vector<std::size_t>& shape) {
    components_.reserve(shape.size());
    for (std::size_t n : shape) components_.emplace_back(n, Scalar(0));
  }

  /// Highest dimension index plus one.
  int dimensions() const { return static_cast<int>(components_.size()); }
  std::vector<std::size_t> shape() const {
    std::vector<std::size_t> s;
    for (const auto& c : components_) s.push_back(c.size());
    return s;
  }

  std::span<const Scalar> component(int k) const {
    check(k);
    return components_[k];
  }

  Scalar& at(int k, std::size_t i) {
    check(k, i);
    return components_[k][i];
  }
  const Scalar& at(int k, std::size_t i) const {
    check(k, i);
    return components_[k][i];
  }

  bool is_zero() const {
    for (const auto& c : components_)
      for (const auto& v : c)
        if (v != 0) return false;
    return true;
  }

  GradedVector& operator+=(const GradedVector& rhs) {
    same_shape(rhs);
    for (std::size_t k = 0; k < components_.size(); ++k)
      for (std::size_t i = 0; i < components_[k].size(); ++i) components_[k][i] += rhs.components_[k][i];
    return *this;
  }
  friend GradedVector operator+(GradedVector lhs, const GradedVector& rhs) { return lhs += rhs; }

  GradedVector& operator*=(const Scalar& c) {
    for (auto& comp : components_)
      for (auto& v : comp) v *= c;
    return *this;
  }
  friend GradedVector operator*(const Scalar& c, GradedVector v) { return v *= c; }

  friend bool operator==(const GradedVector& a, const GradedVector& b) {
    return a.components_ == b.components_;
  }

 private:
  void check(int k) const {
    if (k < 0 || k >= dimensions()) throw UsageError("dimension index out of range");
  }
  void check(int k, std::size_t i) const {
    check(k);
    if (i >= components_[k].size()) throw UsageError("basis position out of range");
  }
  void same_shape(const GradedVector& rhs) const {
    if (shape() != rhs.shape()) throw UsageError("cycle vectors over different bases");
  }

  std::vector<std::vector<Scalar>> components_;
};

/// CH (x) Q valued cycle, the target of tau.
using RationalCycle = GradedVector<Rational>;
/// Integral cycle in CH.
using IntegralCycle = GradedVector<BigInt>;

/// Mod-2 cycle in Ch. Also stands for its image in the torsion-free quotient,
/// which agrees with Ch on the split models handled here.
class ModTwoCycle {
 public:
  ModTwoCycle() = default;
  explicit ModTwoCycle(const std::vector<std::size_t>& shape) {
    for (std::size_t n : shape) bits_.emplace_back(n, false);
  }

  int dimensions() const { return static_cast<int>(bits_.size()); }
  std::vector<std::size_t> shape() const {
    std::vector<std::size_t> s;
    for (const auto& c : bits_) s.push_back(c.size());
    return s;
  }

  bool get(int k, std::size_t i) const {
    check(k, i);
    return bits_[k][i];
  }
  void set(int k, std::size_t i, bool value) {
    check(k, i);
    bits_[k][i] = value;
  }
  void flip(int k, std::size_t i) {
    check(k, i);
    bits_[k][i] = !bits_[k][i];
  }

  bool is_zero() const {
    for (const auto& c : bits_)
      for (bool b : c)
        if (b) return false;
    return true;
  }

  /// Nonzero only in dimension k (the zero cycle is homogeneous of every dimension).
  bool is_homogeneous(int k) const {
    for (int j = 0; j < dimensions(); ++j) {
      if (j == k) continue;
      for (bool b : bits_[j])
        if (b) return false;
    }
    return true;
  }

  ModTwoCycle& operator+=(const ModTwoCycle& rhs) {
    if (shape() != rhs.shape()) throw UsageError("cycle vectors over different bases");
    for (std::size_t k = 0; k < bits_.size(); ++k)
      for (std::size_t i = 0; i < bits_[k].size(); ++i) bits_[k][i] = bits_[k][i] != rhs.bits_[k][i];
    return *this;
  }
  friend ModTwoCycle operator+(ModTwoCycle lhs, const ModTwoCycle& rhs) { return lhs += rhs; }
  friend bool operator==(const ModTwoCycle& a, const ModTwoCycle& b) = default;

 private:
  void check(int k, std::size_t i) const {
    if (k < 0 || k >= dimensions()) throw UsageError("dimension index out of range");
    if (i >= bits_[k].size()) throw UsageError("basis position out of range");
  }

  std::vector<std::vector<bool>> bits_;
};

}  // namespace chowsq
