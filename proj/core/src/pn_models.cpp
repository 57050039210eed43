#include "chowsq/pn_models.hpp"

#include <algorithm>
#include <cctype>

#include "chowsq/error.hpp"
#include "chowsq/series.hpp"

namespace chowsq {

namespace {

std::vector<std::size_t> pn_shape(int n) { return std::vector<std::size_t>(n + 1, 1); }

std::string product_id(int i, int j) { return "P" + std::to_string(i) + "xP" + std::to_string(j); }

void require_non_negative(int v, const char* what) {
  if (v < 0) throw UsageError(std::string(what) + " must be non-negative");
}

}  // namespace

VarietyModel pn_model(int n, int order) {
  require_non_negative(n, "n");
  if (order < n) {
    throw UsageError("truncation order " + std::to_string(order) + " loses tau components of P^" +
                     std::to_string(n));
  }
  const TruncatedSeries todd = todd_series(static_cast<unsigned>(order));

  std::vector<std::vector<std::string>> basis;
  std::vector<K0Generator> gens;
  std::vector<std::vector<std::size_t>> phi_map;
  std::vector<RationalCycle> rows;
  for (int j = 0; j <= n; ++j) {
    basis.push_back({"P" + std::to_string(j)});
    gens.push_back({"O_P" + std::to_string(j), j});
    phi_map.push_back({static_cast<std::size_t>(j)});

    const TruncatedSeries todd_tangent = series_pow(todd, static_cast<unsigned>(j + 1));
    RationalCycle row(pn_shape(n));
    for (int k = 0; k <= j; ++k) row.at(k, 0) = todd_tangent.coefficient(static_cast<unsigned>(j - k));
    rows.push_back(std::move(row));
  }
  return VarietyModel("P" + std::to_string(n), n, std::move(basis), std::move(gens),
                      std::move(phi_map), std::move(rows));
}

ChowIndex product_index(int m, int n, int i, int j) {
  if (i < 0 || i > m || j < 0 || j > n) throw UsageError("product basis element out of range");
  // Dimension k lists pairs (i, k - i) with i descending.
  const int k = i + j;
  const int i_max = std::min(m, k);
  return ChowIndex{k, static_cast<std::size_t>(i_max - i)};
}

VarietyModel pn_product_model(int m, int n) {
  require_non_negative(m, "m");
  require_non_negative(n, "n");
  const int dim = m + n;

  std::vector<std::vector<std::string>> basis(dim + 1);
  std::vector<std::vector<std::size_t>> phi_map(dim + 1);
  std::vector<K0Generator> gens;
  std::vector<ChowIndex> gen_index;
  for (int k = 0; k <= dim; ++k) {
    for (int i = std::min(m, k); i >= 0 && k - i <= n; --i) {
      basis[k].push_back(product_id(i, k - i));
      phi_map[k].push_back(gens.size());
      gens.push_back({"O_P" + std::to_string(i) + "xO_P" + std::to_string(k - i), k});
    }
  }
  std::vector<std::size_t> shape;
  for (const auto& b : basis) shape.push_back(b.size());

  const TruncatedSeries todd = todd_series(static_cast<unsigned>(dim));
  const TruncatedSeries todd_x = embed(todd, 0);
  const TruncatedSeries todd_y = embed(todd, 1);

  // Rows follow the generator order built above.
  std::vector<RationalCycle> rows;
  rows.reserve(gens.size());
  for (int k = 0; k <= dim; ++k) {
    for (int i = std::min(m, k); i >= 0 && k - i <= n; --i) {
      const int j = k - i;
      const unsigned order = static_cast<unsigned>(i + j);
      const TruncatedSeries series =
          series_pow(todd_x.truncated(order), static_cast<unsigned>(i + 1)) *
          series_pow(todd_y.truncated(order), static_cast<unsigned>(j + 1));
      RationalCycle row(shape);
      for (int a = 0; a <= i; ++a) {
        for (int b = 0; b <= j; ++b) {
          const ChowIndex at = product_index(m, n, a, b);
          row.at(at.dim, at.pos) =
              series.coefficient(TruncatedSeries::Exponent{static_cast<unsigned>(i - a),
                                                           static_cast<unsigned>(j - b)});
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return VarietyModel("P" + std::to_string(m) + "xP" + std::to_string(n), dim, std::move(basis),
                      std::move(gens), std::move(phi_map), std::move(rows));
}

ModTwoCycle external_product(int m, int n, const ModTwoCycle& x, const ModTwoCycle& y) {
  if (x.shape() != pn_shape(m) || y.shape() != pn_shape(n)) {
    throw UsageError("external product factors do not live on P^m and P^n");
  }
  std::vector<std::size_t> shape;
  for (int k = 0; k <= m + n; ++k) {
    shape.push_back(static_cast<std::size_t>(std::min(m, k) - std::max(0, k - n) + 1));
  }
  ModTwoCycle out(shape);
  for (int i = 0; i <= m; ++i) {
    if (!x.get(i, 0)) continue;
    for (int j = 0; j <= n; ++j) {
      if (!y.get(j, 0)) continue;
      const ChowIndex at = product_index(m, n, i, j);
      out.flip(at.dim, at.pos);
    }
  }
  return out;
}

RationalCycle pushforward_linear(int j, int n, const RationalCycle& c) {
  if (j < 0 || j > n) throw UsageError("linear push-forward needs 0 <= j <= n");
  if (c.shape() != pn_shape(j)) throw UsageError("cycle does not live on P^" + std::to_string(j));
  RationalCycle out(pn_shape(n));
  for (int k = 0; k <= j; ++k) out.at(k, 0) = c.at(k, 0);
  return out;
}

ModTwoCycle pushforward_linear(int j, int n, const ModTwoCycle& c) {
  if (j < 0 || j > n) throw UsageError("linear push-forward needs 0 <= j <= n");
  if (c.shape() != pn_shape(j)) throw UsageError("cycle does not live on P^" + std::to_string(j));
  ModTwoCycle out(pn_shape(n));
  for (int k = 0; k <= j; ++k) out.set(k, 0, c.get(k, 0));
  return out;
}

ModTwoCycle pn_basis_cycle(int n, int k) {
  if (k < 0 || k > n) throw UsageError("[P^" + std::to_string(k) + "] is not a class on P^" + std::to_string(n));
  ModTwoCycle c(pn_shape(n));
  c.set(k, 0, true);
  return c;
}

std::string pn_cycle_str(const VarietyModel& model, const ModTwoCycle& c) {
  std::string out;
  for (int k = model.dim(); k >= 0; --k) {
    for (std::size_t i = 0; i < model.chow_basis(k).size(); ++i) {
      if (!c.get(k, i)) continue;
      if (!out.empty()) out += " + ";
      std::string id = model.chow_basis(k)[i];
      for (auto& ch : id) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      out += id;
    }
  }
  return out.empty() ? "0" : out;
}

LeibnizReport verify_leibniz(int m, int n) {
  LeibnizReport report;
  report.m = m;
  report.n = n;
  const VarietyModel left = pn_model(m);
  const VarietyModel right = pn_model(n);
  const VarietyModel product = pn_product_model(m, n);

  for (int i = 0; i <= m; ++i) {
    const ModTwoCycle x = pn_basis_cycle(m, i);
    const ModTwoCycle sq_x = sq1_generic(left, x, i);
    for (int j = 0; j <= n; ++j) {
      const ModTwoCycle y = pn_basis_cycle(n, j);
      const ModTwoCycle sq_y = sq1_generic(right, y, j);

      const ModTwoCycle lhs = sq1_generic(product, external_product(m, n, x, y), i + j);
      const ModTwoCycle rhs = external_product(m, n, x, sq_y) + external_product(m, n, sq_x, y);
      ++report.pairs;
      if (lhs != rhs) {
        report.mismatches.push_back({i, j, pn_cycle_str(product, lhs), pn_cycle_str(product, rhs)});
      }
    }
  }
  return report;
}

NaturalityReport verify_naturality(int max_n) {
  require_non_negative(max_n, "n");
  NaturalityReport report;
  report.max_n = max_n;
  std::vector<VarietyModel> models;
  for (int n = 0; n <= max_n; ++n) models.push_back(pn_model(n));

  for (int n = 0; n <= max_n; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k <= j; ++k) {
        const ModTwoCycle x = pn_basis_cycle(j, k);
        const ModTwoCycle pushed_then_sq = sq1_generic(models[n], pushforward_linear(j, n, x), k);
        const ModTwoCycle sq_then_pushed = pushforward_linear(j, n, sq1_generic(models[j], x, k));
        ++report.checks;
        if (pushed_then_sq != sq_then_pushed) {
          report.mismatches.push_back("P" + std::to_string(j) + " -> P" + std::to_string(n) +
                                      ", [P" + std::to_string(k) + "]: " +
                                      pn_cycle_str(models[n], pushed_then_sq) + " vs " +
                                      pn_cycle_str(models[n], sq_then_pushed));
        }
      }
    }
  }
  return report;
}

}  // namespace chowsq
