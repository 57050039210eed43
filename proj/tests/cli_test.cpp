#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "chowsq/error.hpp"
#include "chowsq/pn_models.hpp"
#include "cli.hpp"
#include "cycle_text.hpp"

namespace chowsq {
namespace {

using E = QuadricBasisElement;
using P = ProductBasisElement;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CycleText, ProductPairs) {
  QuadricContext ctx(5);
  auto c = cli::parse_product_cycle("h0 x l1 + l1 x h0", ctx);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_TRUE(c.contains(P{E::l(1), E::h(0)}));
  EXPECT_TRUE(cli::is_product_expression("h0 x l1"));
  EXPECT_FALSE(cli::is_product_expression("h0 + l1"));
}

TEST(CycleText, RepeatedTermsCancel) {
  QuadricContext ctx(7);
  EXPECT_TRUE(cli::parse_quadric_cycle("l3 + l3", ctx).is_zero());
  EXPECT_TRUE(cli::parse_quadric_cycle("0", ctx).is_zero());
  EXPECT_EQ(cli::parse_quadric_cycle(" h1+l2 ", ctx), (QuadricF2Cycle{E::h(1), E::l(2)}));
}

TEST(CycleText, ErrorsCarryColumn) {
  QuadricContext ctx(5);
  try {
    cli::parse_quadric_cycle("h-1", ctx);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 2u);
  }
  try {
    cli::parse_quadric_cycle("h0 + l9", ctx);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 6u);
  }
  EXPECT_THROW(cli::parse_quadric_cycle("", ctx), ParseError);
  EXPECT_THROW(cli::parse_quadric_cycle("h0 +", ctx), ParseError);
  EXPECT_THROW(cli::parse_product_cycle("h0", ctx), ParseError);
  EXPECT_THROW(cli::parse_quadric_cycle("h0 x l1", ctx), ParseError);
  EXPECT_THROW(cli::parse_pn_cycle("q1", 3), ParseError);
}

TEST(CycleText, PnClassesAddOverIntegers) {
  auto model = pn_model(3);
  K0Vector x = cli::parse_pn_class("o2 + o2 + o1", model);
  K0Vector expected;
  expected.add(2, 2);
  expected.add(1, 1);
  EXPECT_EQ(x, expected);
  EXPECT_THROW(cli::parse_pn_class("o4", model), ParseError);
}

TEST(CycleText, RoundTripPn) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng() % 12);
    auto model = pn_model(n);
    ModTwoCycle c = model.zero_mod_two();
    for (int k = 0; k <= n; ++k) c.set(k, 0, rng() & 1);
    EXPECT_EQ(cli::parse_pn_cycle(pn_cycle_str(model, c), n), c);
  }
}

TEST(CycleText, RoundTripQuadric) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    QuadricContext ctx(1 + static_cast<int>(rng() % 20));
    QuadricF2Cycle c;
    for (const auto& e : quadric_basis(ctx)) {
      if (rng() & 1) c.toggle(e);
    }
    EXPECT_EQ(cli::parse_quadric_cycle(str(c), ctx), c) << str(c);
  }
}

TEST(CycleText, RoundTripProduct) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    QuadricContext ctx(1 + static_cast<int>(rng() % 12));
    ProductF2Cycle c;
    auto basis = quadric_basis(ctx);
    const int terms = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) c.toggle(P{basis[rng() % basis.size()], basis[rng() % basis.size()]});
    if (c.is_zero()) continue;
    EXPECT_EQ(cli::parse_product_cycle(str(c), ctx), c) << str(c);
  }
}

TEST(Cli, Todd) {
  auto r = run({"todd", "--order", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + 1/2*x + 1/12*x^2 - 1/720*x^4\n");
}

TEST(Cli, Tau) {
  auto r = run({"tau", "--pn", "3", "--class", "o3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "gen O_P3 level=3 tau=[3:1,2:2,1:11/6,0:1]\n");
}

TEST(Cli, Sq1) {
  auto pn = run({"sq1", "--pn", "5", "--cycle", "p2"});
  EXPECT_EQ(pn.code, 0);
  EXPECT_EQ(pn.out, "p1\n");
  auto quadric = run({"sq1", "--quadric", "5", "--cycle", "h0 x l2"});
  EXPECT_EQ(quadric.code, 0);
  EXPECT_EQ(quadric.out, "h0 x l1 + h1 x l2\n");
}

TEST(Cli, VerifyCommands) {
  auto integrality = run({"verify", "integrality", "--pn", "3", "--k", "3"});
  EXPECT_EQ(integrality.code, 0);
  EXPECT_EQ(integrality.out,
            "integrality P3 k=3: pass (4 generators, 100 trials, seed 0)\n"
            "expected sharpness witness: 2*tau_1(O_P3) = 11/3 is not integral\n");
  auto leibniz = run({"verify", "leibniz", "--m", "4", "--n", "4"});
  EXPECT_EQ(leibniz.code, 0);
  EXPECT_EQ(leibniz.out, "0 mismatches / 25 pairs\n");
  auto nocontam = run({"verify", "nocontam", "--dim", "5", "--i1", "2"});
  EXPECT_EQ(nocontam.code, 0);
  EXPECT_NE(nocontam.out.find("0 violators / 1 admissible elements\n"), std::string::npos);
  auto derivation = run({"verify", "derivation", "--dim", "5"});
  EXPECT_EQ(derivation.code, 0);
  EXPECT_EQ(derivation.out, "0 failures / 12 checks\n");
}

TEST(Cli, WittExitCodes) {
  auto excluded = run({"witt", "--dim-phi", "7", "--i1", "2"});
  EXPECT_EQ(excluded.code, 1);
  EXPECT_EQ(excluded.out, "excluded by the first Witt index parity theorem; axioms_used=[EKM-73.21]\n");
  EXPECT_EQ(run({"witt", "--dim-phi", "7", "--i1", "1"}).code, 0);
  EXPECT_EQ(run({"witt", "--dim-phi", "8", "--i1", "2"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"todd", "--order", "4", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"witt", "--dim-phi", "7", "--i1", "4"}).code, 2);
  EXPECT_EQ(run({"todd", "--order", "-1"}).code, 2);
  EXPECT_EQ(run({"sq1", "--cycle", "p1"}).code, 2);
  auto bad = run({"sq1", "--quadric", "5", "--cycle", "h-1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("column 2"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, JsonGolden) {
  EXPECT_EQ(run({"--json", "todd", "--order", "3"}).out,
            R"({"command":"todd","input":{"order":3},"result":{"series":"1 + 1/2*x + 1/12*x^2",)"
            R"("coefficients":["1/1","1/2","1/12","0/1"]},"axioms_used":[]})"
            "\n");
  auto witt = run({"witt", "--dim-phi", "7", "--i1", "2", "--json"});
  EXPECT_EQ(witt.code, 1);
  EXPECT_EQ(witt.out,
            R"({"command":"witt","input":{"dim_phi":7,"i1":2},"result":{"verdict":"excluded","coeff_outer":0,)"
            R"("coeff_inner":1,"sq1_pi":"h1 x l1 + l1 x h1"},"axioms_used":["EKM-73.21"]})"
            "\n");
  EXPECT_EQ(run({"--json", "tau", "--pn", "2", "--class", "o2"}).out,
            R"({"command":"tau","input":{"pn":2,"class":"o2"},"result":{"model":"P2","level":2,"tau":[)"
            R"({"dim":2,"basis":"P2","coeff":"1/1"},{"dim":1,"basis":"P1","coeff":"3/2"},)"
            R"({"dim":0,"basis":"P0","coeff":"1/1"}]},"axioms_used":[]})"
            "\n");
}

}  // namespace
}  // namespace chowsq
