#include "chowsq/series.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "chowsq/error.hpp"

namespace chowsq {

namespace {

unsigned total_degree(const TruncatedSeries::Exponent& e) { return e[0] + e[1]; }

void check_arity(int arity) {
  if (arity != 1 && arity != 2) throw UsageError("series arity must be 1 or 2");
}

void require_same_arity(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.arity() != b.arity()) {
    throw UsageError("series arity mismatch: " + std::to_string(a.arity()) + " vs " +
                     std::to_string(b.arity()));
  }
}

// Monomials of total degree <= order, graded.
std::vector<TruncatedSeries::Exponent> graded_monomials(int arity, unsigned order) {
  std::vector<TruncatedSeries::Exponent> out;
  for (unsigned t = 0; t <= order; ++t) {
    if (arity == 1) {
      out.push_back({t, 0});
    } else {
      for (unsigned b = 0; b <= t; ++b) out.push_back({t - b, b});
    }
  }
  return out;
}

std::string monomial_str(const TruncatedSeries::Exponent& e) {
  std::string out;
  const char* names[] = {"x", "y"};
  for (int v = 0; v < 2; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[v];
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int arity, unsigned order) : arity_(arity), order_(order) {
  check_arity(arity);
}

TruncatedSeries::TruncatedSeries(int arity, unsigned order,
                                 const std::map<Exponent, Rational>& terms)
    : TruncatedSeries(arity, order) {
  for (const auto& [e, c] : terms) {
    if (arity == 1 && e[1] != 0) throw UsageError("one-variable series given a y exponent");
    if (total_degree(e) <= order) set(e, c);
  }
}

TruncatedSeries TruncatedSeries::from_coefficients(unsigned order,
                                                   const std::vector<Rational>& coeffs) {
  TruncatedSeries s(1, order);
  for (unsigned k = 0; k < coeffs.size() && k <= order; ++k) s.set({k, 0}, coeffs[k]);
  return s;
}

TruncatedSeries TruncatedSeries::constant(int arity, unsigned order, const Rational& c) {
  TruncatedSeries s(arity, order);
  s.set({0, 0}, c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(int arity, unsigned order, int which) {
  check_arity(arity);
  if (which < 0 || which >= arity) throw UsageError("variable index out of range");
  TruncatedSeries s(arity, order);
  Exponent e{0, 0};
  e[which] = 1;
  if (order >= 1) s.set(e, 1);
  return s;
}

void TruncatedSeries::set(Exponent e, const Rational& c) {
  if (c.is_zero()) {
    terms_.erase(e);
  } else {
    terms_[e] = c;
  }
}

Rational TruncatedSeries::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational() : it->second;
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
  return TruncatedSeries(arity_, std::min(order, order_), terms_);
}

std::string TruncatedSeries::str() const {
  std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (total_degree(a.first) != total_degree(b.first)) {
      return total_degree(a.first) < total_degree(b.first);
    }
    return a.first[0] > b.first[0];
  });
  if (sorted.empty()) return "0";

  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rational magnitude = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_str(e);
    if (mono.empty()) {
      os << magnitude.str();
    } else if (magnitude == Rational(1)) {
      os << mono;
    } else {
      os << magnitude.str() << "*" << mono;
    }
  }
  return os.str();
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_arity(a, b);
  TruncatedSeries out = a.truncated(b.order());
  for (const auto& [e, c] : b.terms()) {
    if (total_degree(e) <= out.order()) out.set(e, out.coefficient(e) + c);
  }
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a + Rational(-1) * b;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  TruncatedSeries out(a.arity(), a.order());
  for (const auto& [e, v] : a.terms()) out.set(e, c * v);
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_arity(a, b);
  const unsigned order = std::min(a.order(), b.order());
  std::map<TruncatedSeries::Exponent, Rational> acc;
  for (const auto& [ea, ca] : a.terms()) {
    if (total_degree(ea) > order) continue;
    for (const auto& [eb, cb] : b.terms()) {
      TruncatedSeries::Exponent e{ea[0] + eb[0], ea[1] + eb[1]};
      if (total_degree(e) > order) continue;
      acc[e] += ca * cb;
    }
  }
  return TruncatedSeries(a.arity(), order, acc);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  const Rational a0 = a.coefficient(TruncatedSeries::Exponent{0, 0});
  if (a0.is_zero()) throw NonInvertibleError("series with zero constant term is not invertible");

  // b_e = -(1/a0) * sum_{0 < f <= e} a_f b_{e-f}, solved in graded order.
  std::map<TruncatedSeries::Exponent, Rational> inv;
  const Rational inv_a0 = Rational(1) / a0;
  for (const auto& e : graded_monomials(a.arity(), a.order())) {
    if (e[0] == 0 && e[1] == 0) {
      inv[e] = inv_a0;
      continue;
    }
    Rational acc;
    for (const auto& [f, cf] : a.terms()) {
      if (total_degree(f) == 0 || f[0] > e[0] || f[1] > e[1]) continue;
      auto it = inv.find({e[0] - f[0], e[1] - f[1]});
      if (it != inv.end()) acc += cf * it->second;
    }
    if (!acc.is_zero()) inv[e] = -acc * inv_a0;
  }
  return TruncatedSeries(a.arity(), a.order(), inv);
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned exponent) {
  TruncatedSeries result = TruncatedSeries::one(a.arity(), a.order());
  TruncatedSeries base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

TruncatedSeries todd_series(unsigned order) {
  // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
  std::vector<Rational> coeffs;
  BigInt factorial = 1;
  for (unsigned k = 0; k <= order; ++k) {
    factorial *= k + 1;
    coeffs.emplace_back(k % 2 == 0 ? BigInt(1) : BigInt(-1), factorial);
  }
  return series_inverse(TruncatedSeries::from_coefficients(order, coeffs));
}

TruncatedSeries embed(const TruncatedSeries& a, int slot) {
  if (a.arity() != 1) throw UsageError("embed expects a one-variable series");
  if (slot != 0 && slot != 1) throw UsageError("embed slot must be 0 or 1");
  std::map<TruncatedSeries::Exponent, Rational> terms;
  for (const auto& [e, c] : a.terms()) {
    TruncatedSeries::Exponent lifted{0, 0};
    lifted[slot] = e[0];
    terms[lifted] = c;
  }
  return TruncatedSeries(2, a.order(), terms);
}

}  // namespace chowsq
