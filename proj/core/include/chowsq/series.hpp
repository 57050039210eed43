#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "chowsq/rational.hpp"

namespace chowsq {

/// Power series in one or two formal variables (x, y) over Rational, truncated
/// at a total-degree cutoff that travels with the value.
///
/// Mixed-order arithmetic truncates to the smaller order. Zero coefficients
/// are dropped on construction, so the term map only holds nonzero entries.
class TruncatedSeries {
 public:
  using Exponent = std::array<unsigned, 2>;

  TruncatedSeries(int arity, unsigned order);
  TruncatedSeries(int arity, unsigned order, const std::map<Exponent, Rational>& terms);

  /// One-variable series from a dense coefficient list c0 + c1 x + ...
  /// Entries beyond `order` are discarded.
  static TruncatedSeries from_coefficients(unsigned order, const std::vector<Rational>& coeffs);
  static TruncatedSeries constant(int arity, unsigned order, const Rational& c);
  static TruncatedSeries one(int arity, unsigned order) { return constant(arity, order, 1); }
  /// The formal variable number `which` (0 = x, 1 = y).
  static TruncatedSeries variable(int arity, unsigned order, int which);

  int arity() const { return arity_; }
  unsigned order() const { return order_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  Rational coefficient(Exponent e) const;
  Rational coefficient(unsigned k) const { return coefficient(Exponent{k, 0}); }

  TruncatedSeries truncated(unsigned order) const;

  /// Terms in increasing total degree, "c/d*x^k" with reduced fractions.
  std::string str() const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  void set(Exponent e, const Rational& c);

  int arity_;
  unsigned order_;
  std::map<Exponent, Rational> terms_;
};

/// Coefficientwise convolution truncated at min(a.order, b.order).
/// Throws UsageError on arity mismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse up to the truncation order of `a`.
/// Throws NonInvertibleError when the constant term vanishes.
TruncatedSeries series_inverse(const TruncatedSeries& a);

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned exponent);

/// x / (1 - e^{-x}) to the given order, obtained by inverting (1 - e^{-x}) / x.
TruncatedSeries todd_series(unsigned order);

/// Lifts a one-variable series into two variables, substituting variable `slot`.
TruncatedSeries embed(const TruncatedSeries& a, int slot);

}  // namespace chowsq
