#include "chowsq/quadric.hpp"

#include <algorithm>

#include "chowsq/error.hpp"

namespace chowsq {

QuadricContext::QuadricContext(int dimension) : D(dimension), d(dimension / 2), dim_phi(dimension + 2) {
  if (dimension < 1) throw UsageError("quadric dimension must be positive");
}

int dimension(const QuadricContext& ctx, const QuadricBasisElement& e) {
  return e.kind == BasisKind::H ? ctx.D - e.index : e.index;
}

int dimension(const QuadricContext& ctx, const ProductBasisElement& e) {
  return dimension(ctx, e.first) + dimension(ctx, e.second);
}

void validate(const QuadricContext& ctx, const QuadricBasisElement& e) {
  if (e.index < 0 || e.index > ctx.d) {
    throw UsageError(str(e) + " is outside the basis of a split quadric of dimension " +
                     std::to_string(ctx.D) + " (indices 0.." + std::to_string(ctx.d) + ")");
  }
}

void validate(const QuadricContext& ctx, const ProductBasisElement& e) {
  validate(ctx, e.first);
  validate(ctx, e.second);
}

std::string str(const QuadricBasisElement& e) {
  return (e.kind == BasisKind::H ? "h" : "l") + std::to_string(e.index);
}

std::string str(const ProductBasisElement& e) { return str(e.first) + " x " + str(e.second); }

namespace {

template <class Element>
std::string join(const F2Cycle<Element>& c) {
  std::string out;
  for (const auto& e : c.support()) {
    if (!out.empty()) out += " + ";
    out += str(e);
  }
  return out.empty() ? "0" : out;
}

std::optional<QuadricBasisElement> sq1_element(const QuadricContext& ctx, const QuadricBasisElement& e) {
  validate(ctx, e);
  if (e.kind == BasisKind::L) {
    if (e.index == 0 || (e.index + 1) % 2 == 0) return std::nullopt;
    return QuadricBasisElement::l(e.index - 1);
  }
  if ((ctx.D + e.index) % 2 == 0 || e.index + 1 > ctx.d) return std::nullopt;
  return QuadricBasisElement::h(e.index + 1);
}

std::optional<QuadricBasisElement> h_mult_element(const QuadricContext& ctx, const QuadricBasisElement& e) {
  validate(ctx, e);
  if (e.kind == BasisKind::L) {
    if (e.index == 0) return std::nullopt;
    return QuadricBasisElement::l(e.index - 1);
  }
  if (e.index + 1 > ctx.d) return std::nullopt;
  return QuadricBasisElement::h(e.index + 1);
}

}  // namespace

std::string str(const QuadricF2Cycle& c) { return join(c); }
std::string str(const ProductF2Cycle& c) { return join(c); }

std::vector<QuadricBasisElement> quadric_basis(const QuadricContext& ctx) {
  std::vector<QuadricBasisElement> out;
  for (int j = 0; j <= ctx.d; ++j) out.push_back(QuadricBasisElement::h(j));
  for (int i = 0; i <= ctx.d; ++i) out.push_back(QuadricBasisElement::l(i));
  return out;
}

std::vector<ProductBasisElement> product_basis(const QuadricContext& ctx, int dim) {
  std::vector<ProductBasisElement> out;
  const auto basis = quadric_basis(ctx);
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      if (dimension(ctx, a) + dimension(ctx, b) == dim) out.push_back({a, b});
    }
  }
  return out;
}

QuadricF2Cycle sq1_quadric(const QuadricContext& ctx, const QuadricF2Cycle& c) {
  QuadricF2Cycle out;
  for (const auto& e : c.support()) {
    if (auto image = sq1_element(ctx, e)) out.toggle(*image);
  }
  out.set_rational(c.rational());
  return out;
}

QuadricF2Cycle h_mult(const QuadricContext& ctx, const QuadricF2Cycle& c) {
  QuadricF2Cycle out;
  for (const auto& e : c.support()) {
    if (auto image = h_mult_element(ctx, e)) out.toggle(*image);
  }
  // h is defined over the base field.
  out.set_rational(c.rational());
  return out;
}

QuadricF2Cycle sq1_cohomological(const QuadricContext& ctx, const QuadricF2Cycle& c) {
  QuadricF2Cycle out = sq1_quadric(ctx, c);
  if (ctx.dim_phi % 2 != 0) out += h_mult(ctx, c);
  out.set_rational(c.rational());
  return out;
}

ProductF2Cycle external(const QuadricF2Cycle& a, const QuadricF2Cycle& b) {
  ProductF2Cycle out;
  for (const auto& x : a.support()) {
    for (const auto& y : b.support()) out.toggle({x, y});
  }
  out.set_rational(a.rational() && b.rational());
  return out;
}

ProductF2Cycle sq1_product(const QuadricContext& ctx, const ProductF2Cycle& c) {
  ProductF2Cycle out;
  for (const auto& [a, b] : c.support()) {
    if (auto sb = sq1_element(ctx, b)) out.toggle({a, *sb});
    if (auto sa = sq1_element(ctx, a)) out.toggle({*sa, b});
  }
  out.set_rational(c.rational());
  return out;
}

DecisivePositions decisive_positions(int i1) {
  using E = QuadricBasisElement;
  return {{E::h(0), E::l(i1 - 2)}, {E::l(i1 - 2), E::h(0)}, {E::h(1), E::l(i1 - 1)}, {E::l(i1 - 1), E::h(1)}};
}

std::vector<ProductBasisElement> excluded_generators(const QuadricContext& ctx, int i1) {
  using E = QuadricBasisElement;
  std::vector<ProductBasisElement> out = {{E::h(0), E::l(i1 - 1)}, {E::l(i1 - 1), E::h(0)}};
  if (i1 <= ctx.d) {
    out.push_back({E::h(1), E::l(i1)});
    out.push_back({E::l(i1), E::h(1)});
  }
  return out;
}

namespace {

void require_i1(const QuadricContext& ctx, int i1) {
  if (i1 < 2 || i1 > ctx.d + 1) {
    throw UsageError("i1=" + std::to_string(i1) + " outside [2, " + std::to_string(ctx.d + 1) +
                     "] for a quadric of dimension " + std::to_string(ctx.D));
  }
}

}  // namespace

PrimordialReport primordial_sq1(const QuadricContext& ctx, int i1, const ProductF2Cycle& v) {
  require_i1(ctx, i1);
  const int target = ctx.D + i1 - 1;
  for (const auto& e : v.support()) {
    validate(ctx, e);
    if (dimension(ctx, e) != target) {
      throw ConstraintError("residual term " + str(e) + " has dimension " + std::to_string(dimension(ctx, e)) +
                            ", expected " + std::to_string(target));
    }
  }
  for (const auto& e : excluded_generators(ctx, i1)) {
    if (v.contains(e)) throw ConstraintError("residual cycle contains excluded generator " + str(e));
  }

  using E = QuadricBasisElement;
  ProductF2Cycle pi{{E::h(0), E::l(i1 - 1)}, {E::l(i1 - 1), E::h(0)}};
  pi += v;
  pi.set_rational(true);

  const DecisivePositions pos = decisive_positions(i1);
  const ProductF2Cycle sq_v = sq1_product(ctx, v);
  for (const auto& p : pos.all()) {
    if (sq_v.contains(p)) {
      throw InvariantFailure("Sq1 of the residual cycle reaches decisive position " + str(p));
    }
  }

  PrimordialReport report;
  report.i1 = i1;
  report.dim_phi = ctx.dim_phi;
  report.sq1_pi = sq1_product(ctx, pi);
  if (!report.sq1_pi.rational()) throw InvariantFailure("Sq1 lost the rationality of pi");

  report.coeff_outer = report.sq1_pi.contains(pos.outer);
  report.coeff_inner = report.sq1_pi.contains(pos.inner);
  if (report.coeff_outer != report.sq1_pi.contains(pos.outer_mirror) ||
      report.coeff_inner != report.sq1_pi.contains(pos.inner_mirror)) {
    throw InvariantFailure("Sq1(pi) is not symmetric at the decisive positions");
  }
  report.parity_consistent = report.coeff_outer == report.coeff_inner;
  report.verdict = report.parity_consistent ? ParityVerdict::consistent : ParityVerdict::contradiction;
  report.axioms_used = {kLinkageAxiom};
  return report;
}

ContaminationReport no_contamination(const QuadricContext& ctx, int i1) {
  require_i1(ctx, i1);
  ContaminationReport report;
  report.D = ctx.D;
  report.i1 = i1;

  const auto excluded = excluded_generators(ctx, i1);
  const auto positions = decisive_positions(i1).all();
  auto hits_of = [&](const ProductBasisElement& e) {
    std::vector<ProductBasisElement> hits;
    const ProductF2Cycle image = sq1_product(ctx, ProductF2Cycle{e});
    for (const auto& p : positions) {
      if (image.contains(p)) hits.push_back(p);
    }
    return hits;
  };

  for (const auto& e : product_basis(ctx, ctx.D + i1 - 1)) {
    const bool is_excluded = std::find(excluded.begin(), excluded.end(), e) != excluded.end();
    auto hits = hits_of(e);
    if (is_excluded) {
      if (!hits.empty()) report.witnesses.push_back({e, std::move(hits)});
      continue;
    }
    ++report.checked;
    if (!hits.empty()) report.violators.push_back(e);
  }
  return report;
}

DerivationReport verify_derivation(const QuadricContext& ctx) {
  DerivationReport report;
  report.D = ctx.D;
  for (const auto& e : quadric_basis(ctx)) {
    const QuadricF2Cycle c{e};

    ++report.checks;
    const QuadricF2Cycle twice = sq1_quadric(ctx, sq1_quadric(ctx, c));
    if (!twice.is_zero()) report.failures.push_back("Sq1 Sq1 " + str(e) + " = " + str(twice));

    ++report.checks;
    const QuadricF2Cycle lhs = sq1_cohomological(ctx, h_mult(ctx, c));
    const QuadricF2Cycle rhs = h_mult(ctx, h_mult(ctx, c)) + h_mult(ctx, sq1_cohomological(ctx, c));
    if (lhs != rhs) {
      report.failures.push_back("Sq^1(h " + str(e) + ") = " + str(lhs) + " but h^2 " + str(e) +
                                " + h Sq^1(" + str(e) + ") = " + str(rhs));
    }
  }
  return report;
}

WittResult witt_parity(int dim_phi, int i1) {
  if (dim_phi < 3) throw UsageError("dim_phi must be at least 3");
  if (i1 < 1 || i1 > dim_phi / 2) {
    throw UsageError("i1=" + std::to_string(i1) + " outside [1, " + std::to_string(dim_phi / 2) + "]");
  }
  WittResult result;
  result.dim_phi = dim_phi;
  result.i1 = i1;
  if (i1 == 1) {
    result.verdict = WittVerdict::allowed;
    return result;
  }
  const QuadricContext ctx(dim_phi - 2);
  result.report = primordial_sq1(ctx, i1);
  result.verdict = result.report->verdict == ParityVerdict::contradiction ? WittVerdict::excluded
                                                                          : WittVerdict::not_excluded;
  return result;
}

std::string str(WittVerdict v) {
  switch (v) {
    case WittVerdict::allowed:
      return "allowed";
    case WittVerdict::excluded:
      return "excluded";
    case WittVerdict::not_excluded:
      return "not excluded by this test";
  }
  return "";
}

std::string str(ParityVerdict v) {
  return v == ParityVerdict::contradiction ? "contradiction" : "consistent";
}

}  // namespace chowsq
