#include "chowsq/rational.hpp"

#include <stdexcept>

#include "chowsq/error.hpp"

namespace chowsq {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw UsageError("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw UsageError("zero denominator in '" + text + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

std::string Rational::fraction_str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

}  // namespace chowsq
