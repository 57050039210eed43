#pragma once

// Reference computations that share no code path with the library's series
// and model builders: dense coefficient lists, the Bernoulli recurrence, and
// binomial coefficients.

#include <cstdint>
#include <random>
#include <vector>

#include "chowsq/rational.hpp"

namespace chowsq::oracle {

inline BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Bernoulli numbers B_0..B_n with B_1 = -1/2, from
/// sum_{k=0}^{m} C(m+1, k) B_k = 0.
inline std::vector<Rational> bernoulli(unsigned n) {
  std::vector<Rational> b{Rational(1)};
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc;
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[k];
    b.push_back(-acc / Rational(BigInt(m + 1)));
  }
  return b;
}

/// Coefficients of x / (1 - e^{-x}) = sum B_n^+ x^n / n!, with B_1^+ = +1/2.
inline std::vector<Rational> todd_coefficients(unsigned order) {
  auto b = bernoulli(order);
  std::vector<Rational> out;
  for (unsigned n = 0; n <= order; ++n) {
    Rational bn = n == 1 ? Rational(BigInt(1), BigInt(2)) : b[n];
    out.push_back(bn / Rational(factorial(n)));
  }
  return out;
}

/// Dense truncated product of coefficient lists.
inline std::vector<Rational> dense_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                       unsigned order) {
  std::vector<Rational> out(order + 1);
  for (unsigned i = 0; i < a.size() && i <= order; ++i)
    for (unsigned j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<Rational> dense_pow(const std::vector<Rational>& a, unsigned e, unsigned order) {
  std::vector<Rational> out(order + 1);
  out[0] = 1;
  for (unsigned i = 0; i < e; ++i) out = dense_mul(out, a, order);
  return out;
}

/// t_{j,k}: coefficient of [P^k] in tau([O_{P^j}]), i.e. [x^{j-k}] todd^{j+1},
/// computed by dense multiplication of Bernoulli-derived coefficients.
inline Rational pn_tau_entry(unsigned j, unsigned k) {
  auto power = dense_pow(todd_coefficients(j), j + 1, j);
  return power[j - k];
}

/// c_1 of the tangent bundle of P^n read from the total Chern class (1+h)^{n+1}.
inline BigInt pn_first_chern(unsigned n) { return binomial(n + 1, 1); }

inline Rational random_rational(std::mt19937_64& rng, int span = 20) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace chowsq::oracle
