#include "chowsq/chow_model.hpp"

#include <random>
#include <sstream>

#include "chowsq/error.hpp"

namespace chowsq {

BigInt K0Vector::coefficient(std::size_t g) const {
  auto it = coeffs_.find(g);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void K0Vector::add(std::size_t g, const BigInt& c) {
  BigInt v = coefficient(g) + c;
  if (v == 0) {
    coeffs_.erase(g);
  } else {
    coeffs_[g] = v;
  }
}

K0Vector& K0Vector::operator+=(const K0Vector& rhs) {
  for (const auto& [g, c] : rhs.coeffs_) add(g, c);
  return *this;
}

K0Vector operator-(K0Vector lhs, const K0Vector& rhs) {
  for (const auto& [g, c] : rhs.coeffs_) lhs.add(g, -c);
  return lhs;
}

VarietyModel::VarietyModel(std::string name, int dim,
                           std::vector<std::vector<std::string>> chow_basis,
                           std::vector<K0Generator> generators,
                           std::vector<std::vector<std::size_t>> phi_map,
                           std::vector<RationalCycle> tau_rows)
    : name_(std::move(name)),
      dim_(dim),
      chow_basis_(std::move(chow_basis)),
      generators_(std::move(generators)),
      phi_map_(std::move(phi_map)),
      tau_rows_(std::move(tau_rows)) {
  validate();
}

void VarietyModel::validate() const {
  if (dim_ < 0) throw ModelError(name_ + ": negative dimension");
  if (chow_basis_.size() != static_cast<std::size_t>(dim_) + 1) {
    throw ModelError(name_ + ": chow basis must list dimensions 0.." + std::to_string(dim_));
  }
  if (phi_map_.size() != chow_basis_.size()) throw ModelError(name_ + ": phi map shape mismatch");
  if (tau_rows_.size() != generators_.size()) throw ModelError(name_ + ": one tau row per generator");

  std::vector<int> hit(generators_.size(), 0);
  for (int k = 0; k <= dim_; ++k) {
    if (phi_map_[k].size() != chow_basis_[k].size()) {
      throw ModelError(name_ + ": phi map shape mismatch in dimension " + std::to_string(k));
    }
    for (std::size_t i = 0; i < phi_map_[k].size(); ++i) {
      std::size_t g = phi_map_[k][i];
      if (g >= generators_.size()) throw ModelError(name_ + ": phi maps outside the generators");
      if (generators_[g].level != k) {
        throw ModelError(name_ + ": phi sends " + chow_basis_[k][i] + " to generator " +
                         generators_[g].id + " of the wrong filtration level");
      }
      ++hit[g];
    }
  }
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (hit[g] != 1) throw ModelError(name_ + ": phi is not a bijection at " + generators_[g].id);
  }

  const auto expected_shape = shape();
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const RationalCycle& row = tau_rows_[g];
    if (row.shape() != expected_shape) throw ModelError(name_ + ": tau row has wrong shape");
    const int level = generators_[g].level;
    for (int j = level + 1; j <= dim_; ++j) {
      for (const auto& c : row.component(j)) {
        if (!c.is_zero()) {
          throw ModelError(name_ + ": tau(" + generators_[g].id + ") nonzero above its level");
        }
      }
    }
    const ChowIndex top = phi_preimage(g);
    auto comp = row.component(level);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      Rational want = (i == top.pos) ? Rational(1) : Rational(0);
      if (comp[i] != want) {
        throw ModelError(name_ + ": top component of tau(" + generators_[g].id +
                         ") is not its phi-preimage");
      }
    }
  }
}

const std::vector<std::string>& VarietyModel::chow_basis(int k) const {
  if (k < 0 || k > dim_) throw UsageError("dimension " + std::to_string(k) + " out of range");
  return chow_basis_[k];
}

std::vector<std::size_t> VarietyModel::shape() const {
  std::vector<std::size_t> s;
  for (const auto& b : chow_basis_) s.push_back(b.size());
  return s;
}

std::size_t VarietyModel::generator_index(const std::string& id) const {
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (generators_[g].id == id) return g;
  }
  throw UsageError("unknown generator '" + id + "' in model " + name_);
}

std::optional<ChowIndex> VarietyModel::chow_index(const std::string& id) const {
  for (int k = 0; k <= dim_; ++k) {
    for (std::size_t i = 0; i < chow_basis_[k].size(); ++i) {
      if (chow_basis_[k][i] == id) return ChowIndex{k, i};
    }
  }
  return std::nullopt;
}

std::size_t VarietyModel::phi_of(ChowIndex c) const {
  if (c.dim < 0 || c.dim > dim_ || c.pos >= phi_map_[c.dim].size()) {
    throw UsageError("chow basis element out of range in model " + name_);
  }
  return phi_map_[c.dim][c.pos];
}

ChowIndex VarietyModel::phi_preimage(std::size_t g) const {
  if (g >= generators_.size()) throw UsageError("generator index out of range");
  for (int k = 0; k <= dim_; ++k) {
    for (std::size_t i = 0; i < phi_map_[k].size(); ++i) {
      if (phi_map_[k][i] == g) return ChowIndex{k, i};
    }
  }
  throw ModelError(name_ + ": generator without phi-preimage");
}

const RationalCycle& VarietyModel::tau_row(std::size_t g) const {
  if (g >= generators_.size()) throw UsageError("unknown generator index in model " + name_);
  return tau_rows_[g];
}

int VarietyModel::filtration_level(const K0Vector& x) const {
  int level = 0;
  for (const auto& [g, c] : x.coefficients()) {
    if (g >= generators_.size()) throw UsageError("unknown generator index in model " + name_);
    level = std::max(level, generators_[g].level);
  }
  return level;
}

std::string VarietyModel::format_cycle(const RationalCycle& c) const {
  if (c.shape() != shape()) throw UsageError("cycle is not supported on model " + name_);
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (int k = dim_; k >= 0; --k) {
    auto comp = c.component(k);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (comp[i].is_zero()) continue;
      if (!first) os << ",";
      first = false;
      os << k << ":";
      if (comp.size() > 1) os << chow_basis_[k][i] << "=";
      os << comp[i].str();
    }
  }
  os << "]";
  return os.str();
}

std::string VarietyModel::dump_generator(std::size_t g) const {
  const RationalCycle& row = tau_row(g);
  return "gen " + generators_[g].id + " level=" + std::to_string(generators_[g].level) +
         " tau=" + format_cycle(row);
}

std::string VarietyModel::dump() const {
  std::string out;
  for (std::size_t g = 0; g < generators_.size(); ++g) out += dump_generator(g) + "\n";
  return out;
}

RationalCycle tau(const VarietyModel& model, const K0Vector& x) {
  RationalCycle out = model.zero_rational();
  for (const auto& [g, c] : x.coefficients()) {
    out += Rational(c) * model.tau_row(g);
  }
  return out;
}

namespace {

template <class Cycle, class Coeff>
K0Vector lift(const VarietyModel& model, const Cycle& z, Coeff coefficient_at) {
  if (z.shape() != model.shape()) throw UsageError("cycle is not supported on model " + model.name());
  K0Vector out;
  for (int k = 0; k <= model.dim(); ++k) {
    for (std::size_t i = 0; i < model.chow_basis(k).size(); ++i) {
      BigInt c = coefficient_at(z, k, i);
      if (c != 0) out.add(model.phi_of({k, i}), c);
    }
  }
  return out;
}

// Component k of 2*tau(x); empty below dimension 0.
std::vector<Rational> doubled_component(const VarietyModel& model, const K0Vector& x, int k) {
  std::vector<Rational> out;
  if (k < 0) return out;
  RationalCycle t = tau(model, x);
  for (const auto& c : t.component(k)) out.push_back(Rational(2) * c);
  return out;
}

std::string describe(const VarietyModel& model, const K0Vector& x) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : x.coefficients()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*" << model.generators()[g].id;
  }
  return first ? std::string("0") : os.str();
}

K0Vector random_combination(const std::vector<std::size_t>& pool, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  K0Vector x;
  for (std::size_t g : pool) x.add(g, coeff(rng));
  return x;
}

}  // namespace

K0Vector phi(const VarietyModel& model, const ModTwoCycle& z) {
  return lift(model, z, [](const ModTwoCycle& c, int k, std::size_t i) {
    return BigInt(c.get(k, i) ? 1 : 0);
  });
}

K0Vector phi(const VarietyModel& model, const IntegralCycle& z) {
  return lift(model, z, [](const IntegralCycle& c, int k, std::size_t i) { return c.at(k, i); });
}

ModTwoCycle sq1_generic(const VarietyModel& model, const ModTwoCycle& x, int k) {
  if (k < 0 || k > model.dim()) {
    throw UsageError("dimension " + std::to_string(k) + " out of range for " + model.name());
  }
  if (x.shape() != model.shape()) throw UsageError("cycle is not supported on model " + model.name());
  if (!x.is_homogeneous(k)) throw UsageError("sq1 expects a cycle homogeneous of dimension " + std::to_string(k));

  ModTwoCycle out = model.zero_mod_two();
  if (k == 0) return out;

  const K0Vector lifted = phi(model, x);
  const auto doubled = doubled_component(model, lifted, k - 1);
  for (std::size_t i = 0; i < doubled.size(); ++i) {
    const Rational& c = doubled[i];
    if (!c.is_integer()) {
      throw IntegralityViolation("2*tau_" + std::to_string(k - 1) + " of " + describe(model, lifted) +
                                 " has non-integral coefficient " + c.str() + " at " +
                                 model.chow_basis(k - 1)[i]);
    }
    BigInt n = c.numerator();
    if (mpz_odd_p(n.get_mpz_t())) out.set(k - 1, i, true);
  }
  return out;
}

IntegralityReport verify_integrality(const VarietyModel& model, int k, std::size_t trials,
                                     std::uint64_t seed) {
  if (k < 0 || k > model.dim()) {
    throw UsageError("k=" + std::to_string(k) + " out of range [0, " + std::to_string(model.dim()) + "]");
  }
  IntegralityReport report;
  report.model = model.name();
  report.k = k;
  report.trials = trials;
  report.seed = seed;

  std::vector<std::size_t> level_k;      // K^(k)
  std::vector<std::size_t> level_below;  // K^(k-1)
  for (std::size_t g = 0; g < model.generators().size(); ++g) {
    const int level = model.generators()[g].level;
    if (level <= k) level_k.push_back(g);
    if (level <= k - 1) level_below.push_back(g);
  }

  auto check_doubled = [&](const K0Vector& x) {
    for (const auto& c : doubled_component(model, x, k - 1)) {
      if (!c.is_integer()) {
        report.violations.push_back("2*tau_" + std::to_string(k - 1) + "(" + describe(model, x) +
                                    ") = " + c.str() + " is not integral");
        return false;
      }
    }
    return true;
  };
  auto check_lower = [&](const K0Vector& x) {
    if (k == 0) return;
    RationalCycle t = tau(model, x);
    for (const auto& c : t.component(k - 1)) {
      if (!c.is_integer()) {
        report.violations.push_back("tau_" + std::to_string(k - 1) + "(" + describe(model, x) +
                                    ") = " + c.str() + " is not integral on K^(k-1)");
        return;
      }
    }
  };
  auto reduce = [&](const K0Vector& x) {
    std::vector<bool> bits;
    for (const auto& c : doubled_component(model, x, k - 1)) {
      BigInt n = c.numerator();
      bits.push_back(c.is_integer() && mpz_odd_p(n.get_mpz_t()));
    }
    return bits;
  };

  for (std::size_t g : level_k) {
    K0Vector x;
    x.add(g, 1);
    check_doubled(x);
    if (model.generators()[g].level <= k - 1) check_lower(x);
    ++report.generators_checked;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    K0Vector x = random_combination(level_k, rng);
    if (!check_doubled(x)) continue;
    if (level_below.empty()) continue;
    K0Vector y = random_combination(level_below, rng);
    check_lower(y);
    // s_k kills K^(k-1): x and x + y must reduce to the same class.
    if (check_doubled(x + y) && reduce(x) != reduce(x + y)) {
      report.violations.push_back("mod-2 reduction of 2*tau_" + std::to_string(k - 1) +
                                  " differs on " + describe(model, x) + " and its shift by " +
                                  describe(model, y));
    }
  }

  if (k >= 2) {
    for (std::size_t g : level_k) {
      if (model.generators()[g].level != k) continue;
      auto comp = model.tau_row(g).component(k - 2);
      for (std::size_t i = 0; i < comp.size(); ++i) {
        Rational doubled = Rational(2) * comp[i];
        if (!doubled.is_integer()) {
          report.sharpness_witnesses.push_back(
              {model.generators()[g].id, k - 2, ChowIndex{k - 2, i}, doubled});
        }
      }
    }
  }
  return report;
}

}  // namespace chowsq
