#pragma once

#include <compare>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace chowsq {

using BigInt = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and operator
/// leaves the value canonicalized, so structural equality is value equality.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by design of arithmetic code
  Rational(const BigInt& value) : value_(value) {}  // NOLINT
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts "n" or "n/d" with an optional leading sign.
  static Rational parse(const std::string& text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "n" for integers, otherwise "n/d".
  std::string str() const;
  /// Always "n/d", used by the JSON surface.
  std::string fraction_str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

}  // namespace chowsq
