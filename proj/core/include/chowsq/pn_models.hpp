#pragma once

#include <string>
#include <vector>

#include "chowsq/chow_model.hpp"

namespace chowsq {

/// Model of P^n. Chow basis [P^0..P^n] (ids "P<j>"), K_0 generators
/// [O_{P^j}] (ids "O_P<j>") at filtration level j, and
///   tau([O_{P^j}]) = sum_k t_{j,k} [P^k],  t_{j,k} = [x^{j-k}] todd(x)^{j+1},
/// the Todd class of the tangent bundle of P^j capped with its fundamental
/// class. `order` is the Todd truncation; it must be at least n.
VarietyModel pn_model(int n, int order);
inline VarietyModel pn_model(int n) { return pn_model(n, n); }

/// Model of P^m x P^n. Chow basis [P^i x P^j] (ids "P<i>xP<j>"), generators
/// [O_{P^i}] boxtimes [O_{P^j}] (ids "O_P<i>xO_P<j>") at level i + j, and tau
/// read off the two-variable series todd(x)^{i+1} todd(y)^{j+1} truncated at
/// total degree i + j.
VarietyModel pn_product_model(int m, int n);

/// Basis element [P^i x P^j] of pn_product_model(m, n).
ChowIndex product_index(int m, int n, int i, int j);

/// External product of mod-2 cycles on pn_model(m) and pn_model(n).
ModTwoCycle external_product(int m, int n, const ModTwoCycle& x, const ModTwoCycle& y);

/// Push-forward along a linear embedding P^j -> P^n: [P^k] -> [P^k].
RationalCycle pushforward_linear(int j, int n, const RationalCycle& c);
ModTwoCycle pushforward_linear(int j, int n, const ModTwoCycle& c);

/// Fundamental-class style basis cycle [P^k] on pn_model(n).
ModTwoCycle pn_basis_cycle(int n, int k);

struct LeibnizMismatch {
  int i = 0;
  int j = 0;
  std::string lhs;
  std::string rhs;
};

struct LeibnizReport {
  int m = 0;
  int n = 0;
  std::size_t pairs = 0;
  std::vector<LeibnizMismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Compares Sq1 on P^m x P^n with x~ x Sq1(y) + Sq1(x) x y~ for every basis pair.
LeibnizReport verify_leibniz(int m, int n);

struct NaturalityReport {
  int max_n = 0;
  std::size_t checks = 0;
  std::vector<std::string> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Sq1(push(x)) == push(Sq1(x)) for every basis x on P^j, j <= n <= max_n.
NaturalityReport verify_naturality(int max_n);

/// Mod-2 text of a cycle on a pn-style model: "p1 + p0", "0" when empty.
std::string pn_cycle_str(const VarietyModel& model, const ModTwoCycle& c);

}  // namespace chowsq
