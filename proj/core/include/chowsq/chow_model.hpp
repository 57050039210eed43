#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowsq/cycles.hpp"
#include "chowsq/rational.hpp"

namespace chowsq {

/// Position of a Chow basis element: dimension and index within that dimension.
struct ChowIndex {
  int dim = 0;
  std::size_t pos = 0;

  friend auto operator<=>(const ChowIndex&, const ChowIndex&) = default;
};

/// Generator of K_0 together with its level in the topological filtration.
struct K0Generator {
  std::string id;
  int level = 0;
};

/// Integer combination of K_0 generators, keyed by generator index.
class K0Vector {
 public:
  K0Vector() = default;

  const std::map<std::size_t, BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t g) const;

  void add(std::size_t g, const BigInt& c);
  bool is_zero() const { return coeffs_.empty(); }

  K0Vector& operator+=(const K0Vector& rhs);
  friend K0Vector operator+(K0Vector lhs, const K0Vector& rhs) { return lhs += rhs; }
  friend K0Vector operator-(K0Vector lhs, const K0Vector& rhs);
  friend bool operator==(const K0Vector&, const K0Vector&) = default;

 private:
  std::map<std::size_t, BigInt> coeffs_;
};

/// Finite presentation of a variety: Chow basis graded by dimension, K_0
/// generators with filtration levels, the comparison map phi, and the
/// homological Chern character tau on every generator.
///
/// The constructor enforces:
///  - phi is a bijection from Chow basis elements onto generators, sending a
///    dimension-k element to a level-k generator;
///  - tau(g) vanishes above level(g), and its level(g) component is exactly
///    the phi-preimage of g with coefficient 1.
/// Violations throw ModelError.
class VarietyModel {
 public:
  VarietyModel(std::string name, int dim, std::vector<std::vector<std::string>> chow_basis,
               std::vector<K0Generator> generators,
               std::vector<std::vector<std::size_t>> phi_map, std::vector<RationalCycle> tau_rows);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& chow_basis(int k) const;
  std::vector<std::size_t> shape() const;

  const std::vector<K0Generator>& generators() const { return generators_; }
  std::size_t generator_index(const std::string& id) const;
  std::optional<ChowIndex> chow_index(const std::string& id) const;

  /// Generator index of phi applied to a basis element.
  std::size_t phi_of(ChowIndex c) const;
  /// Chow basis element whose phi-image is generator g.
  ChowIndex phi_preimage(std::size_t g) const;
  const RationalCycle& tau_row(std::size_t g) const;

  /// Highest level among generators with nonzero coefficient; 0 for zero.
  int filtration_level(const K0Vector& x) const;

  RationalCycle zero_rational() const { return RationalCycle(shape()); }
  ModTwoCycle zero_mod_two() const { return ModTwoCycle(shape()); }
  IntegralCycle zero_integral() const { return IntegralCycle(shape()); }

  /// `[dim:coeff,...]`, top dimension first, zero entries omitted.
  /// Dimensions with several basis elements use `dim:<basis id>=coeff`.
  std::string format_cycle(const RationalCycle& c) const;
  /// `gen <id> level=<k> tau=[dim:coeff,...]`
  std::string dump_generator(std::size_t g) const;
  /// One dump_generator line per generator, newline terminated.
  std::string dump() const;

 private:
  void validate() const;

  std::string name_;
  int dim_;
  std::vector<std::vector<std::string>> chow_basis_;
  std::vector<K0Generator> generators_;
  std::vector<std::vector<std::size_t>> phi_map_;
  std::vector<RationalCycle> tau_rows_;
};

/// tau(x) as an integer combination of the tau rows. Component k is tau_k.
RationalCycle tau(const VarietyModel& model, const K0Vector& x);

/// Canonical filtration-respecting lift, coefficients copied basis by basis.
K0Vector phi(const VarietyModel& model, const ModTwoCycle& z);
K0Vector phi(const VarietyModel& model, const IntegralCycle& z);

/// First homological Steenrod square Ch_k -> Ch~_{k-1}: lift through phi,
/// take 2 * tau_{k-1}, check integrality, reduce mod 2.
/// `x` must be homogeneous of dimension k. Throws IntegralityViolation if
/// any coefficient of 2 * tau_{k-1} is not an integer.
ModTwoCycle sq1_generic(const VarietyModel& model, const ModTwoCycle& x, int k);

/// Non-integral value of 2 * tau_{k-2} on a level-k generator: shows the
/// integrality statement does not reach two steps down.
struct SharpnessWitness {
  std::string generator;
  int dimension = 0;
  ChowIndex basis;
  Rational doubled_value;
};

struct IntegralityReport {
  std::string model;
  int k = 0;
  std::size_t generators_checked = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> violations;
  std::vector<SharpnessWitness> sharpness_witnesses;

  bool passed() const { return violations.empty(); }
};

/// Checks that 2 * tau_{k-1} is integral on K^(k) (every generator of level
/// <= k and `trials` random combinations with coefficients in [-9, 9]), and
/// that on K^(k-1) tau_{k-1} is already integral so its double vanishes mod 2.
IntegralityReport verify_integrality(const VarietyModel& model, int k, std::size_t trials = 100,
                                     std::uint64_t seed = 0);

}  // namespace chowsq
