#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "chowsq/error.hpp"
#include "chowsq/pn_models.hpp"
#include "chowsq/quadric.hpp"

namespace chowsq {
namespace {

using E = QuadricBasisElement;
using P = ProductBasisElement;

ProductF2Cycle random_residual(std::mt19937_64& rng, const QuadricContext& ctx, int i1) {
  const auto excluded = excluded_generators(ctx, i1);
  ProductF2Cycle v;
  for (const auto& e : product_basis(ctx, ctx.D + i1 - 1)) {
    if (std::find(excluded.begin(), excluded.end(), e) != excluded.end()) continue;
    if (rng() & 1) v.toggle(e);
  }
  return v;
}

TEST(QuadricContext, Dimensions) {
  QuadricContext odd(5);
  EXPECT_EQ(odd.d, 2);
  EXPECT_EQ(odd.dim_phi, 7);
  QuadricContext even(6);
  EXPECT_EQ(even.d, 3);
  EXPECT_THROW(QuadricContext(0), UsageError);
  EXPECT_EQ(dimension(odd, E::h(1)), 4);
  EXPECT_EQ(dimension(odd, E::l(2)), 2);
  EXPECT_EQ(dimension(odd, P{E::h(0), E::l(2)}), 7);
  EXPECT_THROW(validate(odd, E::l(3)), UsageError);
  EXPECT_EQ(quadric_basis(odd).size(), 6u);
}

TEST(Sq1Quadric, LinearSubspaces) {
  QuadricContext ctx(5);
  EXPECT_EQ(sq1_quadric(ctx, {E::l(2)}), QuadricF2Cycle{E::l(1)});
  EXPECT_TRUE(sq1_quadric(ctx, {E::l(1)}).is_zero());
  EXPECT_TRUE(sq1_quadric(ctx, {E::l(0)}).is_zero());
}

TEST(Sq1Quadric, HyperplanePowers) {
  EXPECT_EQ(sq1_quadric(QuadricContext(5), {E::h(0)}), QuadricF2Cycle{E::h(1)});
  EXPECT_TRUE(sq1_quadric(QuadricContext(6), {E::h(0)}).is_zero());
  // h^{d+1} is twice a basis class.
  EXPECT_TRUE(sq1_quadric(QuadricContext(6), {E::h(3)}).is_zero());
  EXPECT_TRUE(sq1_quadric(QuadricContext(6), {E::h(2)}).is_zero());
  EXPECT_EQ(sq1_quadric(QuadricContext(6), {E::h(1)}), QuadricF2Cycle{E::h(2)});
}

TEST(Sq1Quadric, KeepsRationalFlag) {
  QuadricContext ctx(7);
  EXPECT_TRUE(sq1_quadric(ctx, QuadricF2Cycle({E::l(2)}, true)).rational());
  EXPECT_FALSE(sq1_quadric(ctx, QuadricF2Cycle({E::l(2)}, false)).rational());
}

TEST(HMult, Examples) {
  QuadricContext ctx(5);
  EXPECT_EQ(h_mult(ctx, {E::h(0)}), QuadricF2Cycle{E::h(1)});
  EXPECT_EQ(h_mult(ctx, {E::l(2)}), QuadricF2Cycle{E::l(1)});
  EXPECT_TRUE(h_mult(ctx, {E::l(0)}).is_zero());
}

TEST(Sq1Cohomological, Examples) {
  EXPECT_EQ(sq1_cohomological(QuadricContext(5), {E::h(1)}), QuadricF2Cycle{E::h(2)});
  EXPECT_TRUE(sq1_cohomological(QuadricContext(5), {E::h(0)}).is_zero());
  EXPECT_EQ(sq1_cohomological(QuadricContext(6), {E::l(2)}), QuadricF2Cycle{E::l(1)});
}

TEST(ExternalProduct, CartesianSupport) {
  QuadricF2Cycle a({E::h(0), E::l(1)}, true);
  QuadricF2Cycle b({E::l(2)}, true);
  ProductF2Cycle ab = external(a, b);
  EXPECT_EQ(ab.size(), 2u);
  EXPECT_TRUE(contains(ab, P{E::l(1), E::l(2)}));
  EXPECT_TRUE(ab.rational());
  EXPECT_FALSE(external(a, QuadricF2Cycle{E::l(2)}).rational());
}

TEST(Sq1Product, Leibniz) {
  QuadricContext ctx(5);
  ProductF2Cycle image = sq1_product(ctx, {P{E::h(0), E::l(2)}});
  EXPECT_EQ(image, (ProductF2Cycle{P{E::h(0), E::l(1)}, P{E::h(1), E::l(2)}}));
  EXPECT_EQ(str(image), "h0 x l1 + h1 x l2");
}

TEST(Sq1Product, AgreesWithLeibnizFormulaExhaustively) {
  for (int D = 1; D <= 12; ++D) {
    QuadricContext ctx(D);
    for (const auto& a : quadric_basis(ctx)) {
      for (const auto& b : quadric_basis(ctx)) {
        QuadricF2Cycle ca{a}, cb{b};
        ProductF2Cycle expected = external(ca, sq1_quadric(ctx, cb)) + external(sq1_quadric(ctx, ca), cb);
        EXPECT_EQ(sq1_product(ctx, {P{a, b}}), expected) << D << " " << str(P{a, b});
      }
    }
  }
}

TEST(Sq1Product, RationalFlagPropagates) {
  QuadricContext ctx(9);
  ProductF2Cycle pi({P{E::h(0), E::l(3)}, P{E::l(3), E::h(0)}}, true);
  EXPECT_TRUE(sq1_product(ctx, pi).rational());
  EXPECT_FALSE((pi + ProductF2Cycle{P{E::h(1), E::l(4)}}).rational());
}

TEST(QuadricInvariants, NilpotenceAndDerivation) {
  for (int D = 1; D <= 40; ++D) {
    auto r = verify_derivation(QuadricContext(D));
    EXPECT_TRUE(r.passed()) << "D=" << D << " " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(r.checks, 2 * quadric_basis(QuadricContext(D)).size());
  }
}

// Linear subspaces l_i sit in P^i; Sq_1 must match the P^n model there.
TEST(QuadricInvariants, AgreesWithProjectiveSpaceOnLinearSubspaces) {
  for (int D = 1; D <= 20; ++D) {
    QuadricContext ctx(D);
    auto model = pn_model(ctx.d);
    for (int i = 0; i <= ctx.d; ++i) {
      const bool quadric_hits = sq1_quadric(ctx, {E::l(i)}).contains(E::l(i - 1));
      const bool pn_hits = i > 0 && sq1_generic(model, pn_basis_cycle(ctx.d, i), i).get(i - 1, 0);
      EXPECT_EQ(quadric_hits, pn_hits) << "D=" << D << " i=" << i;
    }
  }
}

TEST(QuadricInvariants, WuOnFundamentalClass) {
  for (int D = 1; D <= 40; ++D) {
    const bool odd = D % 2 == 1 && D >= 2;
    EXPECT_EQ(sq1_quadric(QuadricContext(D), {E::h(0)}).contains(E::h(1)), odd) << D;
  }
}

TEST(DecisivePositions, Layout) {
  auto pos = decisive_positions(3);
  EXPECT_EQ(pos.outer, (P{E::h(0), E::l(1)}));
  EXPECT_EQ(pos.outer_mirror, (P{E::l(1), E::h(0)}));
  EXPECT_EQ(pos.inner, (P{E::h(1), E::l(2)}));
  EXPECT_EQ(pos.inner_mirror, (P{E::l(2), E::h(1)}));
}

TEST(ExcludedGenerators, DependsOnRange) {
  QuadricContext ctx(5);
  EXPECT_EQ(excluded_generators(ctx, 2).size(), 4u);
  EXPECT_EQ(excluded_generators(ctx, 3).size(), 2u);
}

TEST(Primordial, OddQuadricContradiction) {
  auto r = primordial_sq1(QuadricContext(5), 2);
  EXPECT_FALSE(r.coeff_outer);
  EXPECT_TRUE(r.coeff_inner);
  EXPECT_EQ(r.verdict, ParityVerdict::contradiction);
  EXPECT_EQ(r.axioms_used, std::vector<std::string>{"EKM-73.21"});
  EXPECT_TRUE(r.sq1_pi.rational());
}

TEST(Primordial, EvenQuadricConsistent) {
  auto r = primordial_sq1(QuadricContext(6), 2);
  EXPECT_FALSE(r.coeff_outer);
  EXPECT_FALSE(r.coeff_inner);
  EXPECT_EQ(r.verdict, ParityVerdict::consistent);
}

TEST(Primordial, OddIndexOnOddQuadric) {
  auto r = primordial_sq1(QuadricContext(7), 3);
  EXPECT_TRUE(r.coeff_outer);
  EXPECT_TRUE(r.coeff_inner);
  EXPECT_EQ(r.verdict, ParityVerdict::consistent);
}

TEST(Primordial, Constraints) {
  QuadricContext ctx(5);
  EXPECT_THROW(primordial_sq1(ctx, 1), UsageError);
  EXPECT_THROW(primordial_sq1(ctx, 4), UsageError);
  EXPECT_THROW(primordial_sq1(ctx, 2, {P{E::h(1), E::l(2)}}), ConstraintError);
  EXPECT_THROW(primordial_sq1(ctx, 2, {P{E::h(0), E::l(0)}}), ConstraintError);
  EXPECT_NO_THROW(primordial_sq1(ctx, 2, {P{E::h(2), E::h(2)}}));
}

TEST(NoContamination, ReportsWitnesses) {
  auto r = no_contamination(QuadricContext(5), 2);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.checked, 0u);
  ASSERT_FALSE(r.witnesses.empty());
  bool saw_inner = false;
  for (const auto& w : r.witnesses) {
    for (const auto& h : w.hits) saw_inner |= h == decisive_positions(2).inner;
  }
  EXPECT_TRUE(saw_inner);
}

TEST(NoContamination, Sweep) {
  for (int D = 3; D <= 30; ++D) {
    QuadricContext ctx(D);
    for (int i1 = 2; i1 <= ctx.d; ++i1) {
      auto r = no_contamination(ctx, i1);
      EXPECT_TRUE(r.passed()) << "D=" << D << " i1=" << i1;
      EXPECT_FALSE(r.witnesses.empty()) << "D=" << D << " i1=" << i1;
    }
  }
}

TEST(WittParity, Examples) {
  EXPECT_EQ(witt_parity(7, 2).verdict, WittVerdict::excluded);
  EXPECT_EQ(witt_parity(7, 1).verdict, WittVerdict::allowed);
  EXPECT_FALSE(witt_parity(7, 1).report.has_value());
  EXPECT_EQ(witt_parity(8, 2).verdict, WittVerdict::not_excluded);
  EXPECT_EQ(witt_parity(8, 4).verdict, WittVerdict::not_excluded);
  EXPECT_EQ(witt_parity(9, 4).verdict, WittVerdict::excluded);
  EXPECT_THROW(witt_parity(2, 1), UsageError);
  EXPECT_THROW(witt_parity(7, 4), UsageError);
  EXPECT_EQ(str(WittVerdict::not_excluded), "not excluded by this test");
}

// Excluded exactly when i1 and dim_phi have different parity.
TEST(WittParity, ParityRule) {
  for (int n = 3; n <= 42; ++n) {
    for (int i1 = 2; i1 <= n / 2; ++i1) {
      auto expected = (n - i1) % 2 != 0 ? WittVerdict::excluded : WittVerdict::not_excluded;
      EXPECT_EQ(witt_parity(n, i1).verdict, expected) << n << " " << i1;
    }
  }
}

TEST(WittParity, IndependentOfResidualCycle) {
  std::mt19937_64 rng(5);
  for (int D = 3; D <= 14; ++D) {
    QuadricContext ctx(D);
    for (int i1 = 2; i1 <= ctx.d + 1; ++i1) {
      const auto base = primordial_sq1(ctx, i1).verdict;
      for (int trial = 0; trial < 50; ++trial) {
        EXPECT_EQ(primordial_sq1(ctx, i1, random_residual(rng, ctx, i1)).verdict, base) << D << " " << i1;
      }
    }
  }
}

TEST(QuadricStr, Format) {
  EXPECT_EQ(str(QuadricF2Cycle{E::h(0), E::l(2)}), "h0 + l2");
  EXPECT_EQ(str(QuadricF2Cycle{}), "0");
  EXPECT_EQ(str(ProductF2Cycle{P{E::h(0), E::l(1)}, P{E::l(1), E::h(0)}}), "h0 x l1 + l1 x h0");
}

}  // namespace
}  // namespace chowsq
