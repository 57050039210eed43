#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace chowsq {

/// Split smooth projective quadric of dimension D. d = floor(D/2) is the
/// dimension of a maximal linear subspace; the quadratic form has D + 2 variables.
struct QuadricContext {
  int D;
  int d;
  int dim_phi;

  explicit QuadricContext(int dimension);
};

enum class BasisKind { H, L };

/// h^index (dimension D - index) or l_index (dimension index), 0 <= index <= d.
struct QuadricBasisElement {
  BasisKind kind = BasisKind::H;
  int index = 0;

  static QuadricBasisElement h(int i) { return {BasisKind::H, i}; }
  static QuadricBasisElement l(int i) { return {BasisKind::L, i}; }

  friend auto operator<=>(const QuadricBasisElement&, const QuadricBasisElement&) = default;
};

struct ProductBasisElement {
  QuadricBasisElement first;
  QuadricBasisElement second;

  friend auto operator<=>(const ProductBasisElement&, const ProductBasisElement&) = default;
};

int dimension(const QuadricContext& ctx, const QuadricBasisElement& e);
int dimension(const QuadricContext& ctx, const ProductBasisElement& e);
/// Throws UsageError if the index leaves [0, d].
void validate(const QuadricContext& ctx, const QuadricBasisElement& e);
void validate(const QuadricContext& ctx, const ProductBasisElement& e);

std::string str(const QuadricBasisElement& e);
std::string str(const ProductBasisElement& e);

/// Mod-2 cycle: the set of basis elements with coefficient 1, plus a flag
/// recording that the cycle is known to be rational (defined over the base
/// field). Sums are rational only when both summands are.
template <class Element>
class F2Cycle {
 public:
  F2Cycle() = default;
  F2Cycle(std::initializer_list<Element> elements, bool rational = false) : rational_(rational) {
    for (const auto& e : elements) toggle(e);
  }

  const std::set<Element>& support() const { return support_; }
  bool contains(const Element& e) const { return support_.count(e) != 0; }
  bool is_zero() const { return support_.empty(); }
  std::size_t size() const { return support_.size(); }

  bool rational() const { return rational_; }
  void set_rational(bool r) { rational_ = r; }

  void toggle(const Element& e) {
    if (!support_.erase(e)) support_.insert(e);
  }

  F2Cycle& operator+=(const F2Cycle& rhs) {
    for (const auto& e : rhs.support_) toggle(e);
    rational_ = rational_ && rhs.rational_;
    return *this;
  }
  friend F2Cycle operator+(F2Cycle lhs, const F2Cycle& rhs) { return lhs += rhs; }
  friend bool operator==(const F2Cycle&, const F2Cycle&) = default;

 private:
  std::set<Element> support_;
  bool rational_ = false;
};

using QuadricF2Cycle = F2Cycle<QuadricBasisElement>;
using ProductF2Cycle = F2Cycle<ProductBasisElement>;

/// "h0 + l2", "h0 x l1 + l1 x h0"; "0" for the empty cycle.
std::string str(const QuadricF2Cycle& c);
std::string str(const ProductF2Cycle& c);

/// h^0..h^d followed by l_0..l_d.
std::vector<QuadricBasisElement> quadric_basis(const QuadricContext& ctx);
/// All pairs of total dimension `dim`, in set order.
std::vector<ProductBasisElement> product_basis(const QuadricContext& ctx, int dim);

/// Sq_1 on the split quadric:
///   l_i -> (i+1) l_{i-1},   h^j -> (D+j) h^{j+1},
/// mod 2, with l_{-1} = 0 and h^{d+1} = 0 (twice a basis class integrally).
/// Preserves the rationality flag.
QuadricF2Cycle sq1_quadric(const QuadricContext& ctx, const QuadricF2Cycle& c);

/// Multiplication by the hyperplane class h.
QuadricF2Cycle h_mult(const QuadricContext& ctx, const QuadricF2Cycle& c);

/// Cohomological Sq^1 = Sq_1 + c_1(T) . (-), with c_1(T) = (D+2) h mod 2.
QuadricF2Cycle sq1_cohomological(const QuadricContext& ctx, const QuadricF2Cycle& c);

/// Cartesian product of supports; rational iff both factors are.
ProductF2Cycle external(const QuadricF2Cycle& a, const QuadricF2Cycle& b);

/// Sq_1 on X x X by the Leibniz rule a x Sq_1(b) + Sq_1(a) x b.
ProductF2Cycle sq1_product(const QuadricContext& ctx, const ProductF2Cycle& c);

inline bool contains(const ProductF2Cycle& c, const ProductBasisElement& e) { return c.contains(e); }

/// Label of the imported statement linking coefficients of a rational cycle
/// at the two pairs of decisive positions.
inline constexpr const char* kLinkageAxiom = "EKM-73.21";

enum class ParityVerdict { consistent, contradiction };

/// Four basis positions that decide the parity argument for a given i1.
struct DecisivePositions {
  ProductBasisElement outer;         // h^0 x l_{i1-2}
  ProductBasisElement outer_mirror;  // l_{i1-2} x h^0
  ProductBasisElement inner;         // h^1 x l_{i1-1}
  ProductBasisElement inner_mirror;  // l_{i1-1} x h^1

  std::vector<ProductBasisElement> all() const { return {outer, outer_mirror, inner, inner_mirror}; }
};
DecisivePositions decisive_positions(int i1);

/// Generators a residual cycle v may not contain: h^0 x l_{i1-1}, its
/// mirror, h^1 x l_{i1}, and its mirror (the latter two only when i1 <= d).
std::vector<ProductBasisElement> excluded_generators(const QuadricContext& ctx, int i1);

struct PrimordialReport {
  int i1 = 0;
  int dim_phi = 0;
  bool coeff_outer = false;
  bool coeff_inner = false;
  bool parity_consistent = true;
  ParityVerdict verdict = ParityVerdict::consistent;
  ProductF2Cycle sq1_pi;
  std::vector<std::string> axioms_used;
};

/// Analyzes Sq_1 of pi = h^0 x l_{i1-1} + l_{i1-1} x h^0 + v.
///
/// Requires 2 <= i1 <= d + 1, v homogeneous of dimension D + i1 - 1 and free
/// of the excluded generators (ConstraintError otherwise). Throws
/// InvariantFailure if Sq_1(v) reaches a decisive position. The verdict is a
/// contradiction when the outer and inner coefficients differ, which the
/// linkage axiom forbids for a rational cycle.
PrimordialReport primordial_sq1(const QuadricContext& ctx, int i1, const ProductF2Cycle& v = {});

struct ContaminationWitness {
  ProductBasisElement generator;
  std::vector<ProductBasisElement> hits;
};

struct ContaminationReport {
  int D = 0;
  int i1 = 0;
  std::size_t checked = 0;
  std::vector<ProductBasisElement> violators;
  std::vector<ContaminationWitness> witnesses;

  bool passed() const { return violators.empty(); }
};

/// Applies Sq_1 to every admissible basis element of dimension D + i1 - 1 and
/// checks that none reaches a decisive position. Excluded generators that do
/// reach one are listed as witnesses.
ContaminationReport no_contamination(const QuadricContext& ctx, int i1);

struct DerivationReport {
  int D = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// On every basis element: Sq_1 Sq_1 = 0, and
/// Sq^1(h . c) = h . h . c + h . Sq^1(c).
DerivationReport verify_derivation(const QuadricContext& ctx);

enum class WittVerdict { allowed, excluded, not_excluded };

struct WittResult {
  int dim_phi = 0;
  int i1 = 0;
  WittVerdict verdict = WittVerdict::allowed;
  std::optional<PrimordialReport> report;
};

/// Parity test on the first Witt index of an anisotropic form of dimension
/// dim_phi. Requires dim_phi >= 3 and 1 <= i1 <= floor(dim_phi / 2).
WittResult witt_parity(int dim_phi, int i1);

std::string str(WittVerdict v);
std::string str(ParityVerdict v);

}  // namespace chowsq
