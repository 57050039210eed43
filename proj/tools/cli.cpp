#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chowsq/chow_model.hpp"
#include "chowsq/error.hpp"
#include "chowsq/pn_models.hpp"
#include "chowsq/quadric.hpp"
#include "chowsq/series.hpp"
#include "cycle_text.hpp"

namespace chowsq::cli {

namespace {

using Json = nlohmann::ordered_json;

// Upper bounds keep every command at desk scale.
constexpr int kMaxTodd = 60;
constexpr int kMaxPn = 40;
constexpr int kMaxProductFactor = 20;
constexpr int kMaxQuadric = 400;

struct Outcome {
  std::string command;
  Json input = Json::object();
  Json result = Json::object();
  std::vector<std::string> axioms_used;
  std::string text;
  int exit_code = kOk;
};

void require_range(const std::string& flag, long value, long lo, long hi) {
  if (value < lo || value > hi) {
    throw UsageError(flag + "=" + std::to_string(value) + " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
}

Json cycle_json(const VarietyModel& model, const RationalCycle& c) {
  Json entries = Json::array();
  for (int k = model.dim(); k >= 0; --k) {
    auto comp = c.component(k);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (comp[i].is_zero()) continue;
      entries.push_back(Json{{"dim", k}, {"basis", model.chow_basis(k)[i]}, {"coeff", comp[i].fraction_str()}});
    }
  }
  return entries;
}

Outcome run_todd(int order) {
  require_range("--order", order, 0, kMaxTodd);
  Outcome o;
  o.command = "todd";
  o.input = {{"order", order}};
  const TruncatedSeries s = todd_series(static_cast<unsigned>(order));
  Json coeffs = Json::array();
  for (int k = 0; k <= order; ++k) coeffs.push_back(s.coefficient(static_cast<unsigned>(k)).fraction_str());
  o.result = {{"series", s.str()}, {"coefficients", coeffs}};
  o.text = s.str() + "\n";
  return o;
}

Outcome run_tau(int n, const std::string& cls) {
  require_range("--pn", n, 0, kMaxPn);
  Outcome o;
  o.command = "tau";
  o.input = {{"pn", n}};
  const VarietyModel model = pn_model(n);
  Json gens = Json::array();
  if (cls.empty()) {
    o.text = model.dump();
    for (std::size_t g = 0; g < model.generators().size(); ++g) {
      gens.push_back({{"id", model.generators()[g].id},
                      {"level", model.generators()[g].level},
                      {"tau", cycle_json(model, model.tau_row(g))}});
    }
    o.result = {{"model", model.name()}, {"generators", gens}};
    return o;
  }
  o.input["class"] = cls;
  const K0Vector x = parse_pn_class(cls, model);
  const RationalCycle t = tau(model, x);
  const auto& coeffs = x.coefficients();
  if (coeffs.size() == 1 && coeffs.begin()->second == 1) {
    o.text = model.dump_generator(coeffs.begin()->first) + "\n";
  } else {
    o.text = "class " + cls + " level=" + std::to_string(model.filtration_level(x)) +
             " tau=" + model.format_cycle(t) + "\n";
  }
  o.result = {{"model", model.name()}, {"level", model.filtration_level(x)}, {"tau", cycle_json(model, t)}};
  return o;
}

Outcome run_sq1_pn(int n, const std::string& expr) {
  require_range("--pn", n, 0, kMaxPn);
  Outcome o;
  o.command = "sq1";
  o.input = {{"pn", n}, {"cycle", expr}};
  const VarietyModel model = pn_model(n);
  const ModTwoCycle x = parse_pn_cycle(expr, n);
  ModTwoCycle image = model.zero_mod_two();
  for (int k = 0; k <= n; ++k) {
    if (x.get(k, 0)) image += sq1_generic(model, pn_basis_cycle(n, k), k);
  }
  const std::string s = pn_cycle_str(model, image);
  o.result = {{"cycle", s}};
  o.text = s + "\n";
  return o;
}

Outcome run_sq1_quadric(int dim, const std::string& expr) {
  require_range("--quadric", dim, 1, kMaxQuadric);
  Outcome o;
  o.command = "sq1";
  o.input = {{"quadric", dim}, {"cycle", expr}};
  const QuadricContext ctx(dim);
  std::string s;
  if (is_product_expression(expr)) {
    s = str(sq1_product(ctx, parse_product_cycle(expr, ctx)));
  } else {
    s = str(sq1_quadric(ctx, parse_quadric_cycle(expr, ctx)));
  }
  o.result = {{"cycle", s}};
  o.text = s + "\n";
  return o;
}

Outcome run_integrality(int n, int k, long trials, long seed) {
  require_range("--pn", n, 0, kMaxPn);
  require_range("--k", k, 0, n);
  require_range("--trials", trials, 0, 1'000'000);
  require_range("--seed", seed, 0, std::numeric_limits<long>::max());
  Outcome o;
  o.command = "verify";
  o.input = {{"check", "integrality"}, {"pn", n}, {"k", k}, {"trials", trials}, {"seed", seed}};
  const IntegralityReport r =
      verify_integrality(pn_model(n), k, static_cast<std::size_t>(trials), static_cast<std::uint64_t>(seed));
  std::ostringstream text;
  text << "integrality " << r.model << " k=" << k << ": " << (r.passed() ? "pass" : "FAIL") << " ("
       << r.generators_checked << " generators, " << r.trials << " trials, seed " << r.seed << ")\n";
  for (const auto& v : r.violations) text << "violation: " << v << "\n";
  Json witnesses = Json::array();
  for (const auto& w : r.sharpness_witnesses) {
    text << "expected sharpness witness: 2*tau_" << w.dimension << "(" << w.generator
         << ") = " << w.doubled_value.str() << " is not integral\n";
    witnesses.push_back({{"generator", w.generator}, {"dim", w.dimension}, {"value", w.doubled_value.fraction_str()}});
  }
  o.text = text.str();
  o.result = {{"passed", r.passed()},
              {"generators_checked", r.generators_checked},
              {"violations", r.violations},
              {"sharpness_witnesses", witnesses}};
  o.exit_code = r.passed() ? kOk : kViolation;
  return o;
}

Outcome run_leibniz(int m, int n) {
  require_range("--m", m, 0, kMaxProductFactor);
  require_range("--n", n, 0, kMaxProductFactor);
  Outcome o;
  o.command = "verify";
  o.input = {{"check", "leibniz"}, {"m", m}, {"n", n}};
  const LeibnizReport r = verify_leibniz(m, n);
  std::ostringstream text;
  for (const auto& mm : r.mismatches) {
    text << "mismatch at [P" << mm.i << "] x [P" << mm.j << "]: " << mm.lhs << " vs " << mm.rhs << "\n";
  }
  text << r.mismatches.size() << " mismatches / " << r.pairs << " pairs\n";
  o.text = text.str();
  o.result = {{"pairs", r.pairs}, {"mismatches", r.mismatches.size()}};
  o.exit_code = r.passed() ? kOk : kViolation;
  return o;
}

Outcome run_nocontam(int dim, int i1) {
  require_range("--dim", dim, 1, kMaxQuadric);
  const QuadricContext ctx(dim);
  require_range("--i1", i1, 2, ctx.d + 1);
  Outcome o;
  o.command = "verify";
  o.input = {{"check", "nocontam"}, {"dim", dim}, {"i1", i1}};
  const ContaminationReport r = no_contamination(ctx, i1);
  std::ostringstream text;
  Json violators = Json::array();
  for (const auto& v : r.violators) {
    text << "violator: " << str(v) << "\n";
    violators.push_back(str(v));
  }
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    std::string hits;
    for (const auto& h : w.hits) hits += (hits.empty() ? "" : ", ") + str(h);
    text << "witness: excluded " << str(w.generator) << " reaches " << hits << "\n";
    witnesses.push_back({{"generator", str(w.generator)}, {"hits", hits}});
  }
  text << r.violators.size() << " violators / " << r.checked << " admissible elements\n";
  o.text = text.str();
  o.result = {{"checked", r.checked}, {"violators", violators}, {"witnesses", witnesses}};
  o.exit_code = r.passed() ? kOk : kViolation;
  return o;
}

Outcome run_derivation(int dim) {
  require_range("--dim", dim, 1, kMaxQuadric);
  Outcome o;
  o.command = "verify";
  o.input = {{"check", "derivation"}, {"dim", dim}};
  const DerivationReport r = verify_derivation(QuadricContext(dim));
  std::ostringstream text;
  for (const auto& f : r.failures) text << "failure: " << f << "\n";
  text << r.failures.size() << " failures / " << r.checks << " checks\n";
  o.text = text.str();
  o.result = {{"checks", r.checks}, {"failures", r.failures}};
  o.exit_code = r.passed() ? kOk : kViolation;
  return o;
}

Outcome run_witt(int dim_phi, int i1) {
  require_range("--dim-phi", dim_phi, 3, kMaxQuadric + 2);
  require_range("--i1", i1, 1, dim_phi / 2);
  Outcome o;
  o.command = "witt";
  o.input = {{"dim_phi", dim_phi}, {"i1", i1}};
  const WittResult r = witt_parity(dim_phi, i1);
  o.result = {{"verdict", str(r.verdict)}};
  if (r.report) {
    o.axioms_used = r.report->axioms_used;
    o.result["coeff_outer"] = r.report->coeff_outer ? 1 : 0;
    o.result["coeff_inner"] = r.report->coeff_inner ? 1 : 0;
    o.result["sq1_pi"] = str(r.report->sq1_pi);
  }
  std::string axioms;
  for (const auto& a : o.axioms_used) axioms += (axioms.empty() ? "" : ",") + a;
  std::string verdict = str(r.verdict);
  if (r.verdict == WittVerdict::excluded) verdict += " by the first Witt index parity theorem";
  o.text = verdict + "; axioms_used=[" + axioms + "]\n";
  o.exit_code = r.verdict == WittVerdict::excluded ? kViolation : kOk;
  return o;
}

void emit(const Outcome& o, bool json, std::ostream& out) {
  if (!json) {
    out << o.text;
    return;
  }
  Json doc;
  doc["command"] = o.command;
  doc["input"] = o.input;
  doc["result"] = o.result;
  doc["axioms_used"] = o.axioms_used;
  out << doc.dump() << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact first Steenrod square on Chow groups of projective spaces and split quadrics", "chowsq"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit machine-readable JSON");

  std::function<Outcome()> action;

  int todd_order = 0;
  auto* todd = app.add_subcommand("todd", "Todd series x/(1-e^-x)");
  todd->add_option("--order", todd_order, "Truncation order")->required();
  todd->callback([&] { action = [&] { return run_todd(todd_order); }; });

  int tau_n = 0;
  std::string tau_class;
  auto* tau_cmd = app.add_subcommand("tau", "Homological Chern character on P^N");
  tau_cmd->add_option("--pn", tau_n, "Dimension N")->required();
  tau_cmd->add_option("--class", tau_class, "K0 class such as 'o2' or 'o2 + o1'");
  tau_cmd->callback([&] { action = [&] { return run_tau(tau_n, tau_class); }; });

  int sq_pn = -1;
  int sq_quadric = -1;
  std::string sq_cycle;
  auto* sq1 = app.add_subcommand("sq1", "Apply the first Steenrod square to a mod-2 cycle");
  auto* pn_opt = sq1->add_option("--pn", sq_pn, "Work on P^N (tokens p<j>)");
  auto* q_opt = sq1->add_option("--quadric", sq_quadric, "Work on a split quadric of dimension D (tokens h<j>, l<i>)");
  pn_opt->excludes(q_opt);
  sq1->add_option("--cycle", sq_cycle, "Cycle expression")->required();
  sq1->callback([&] {
    if (pn_opt->count() == 0 && q_opt->count() == 0) throw CLI::ValidationError("sq1", "one of --pn or --quadric is required");
    if (pn_opt->count() > 0) {
      action = [&] { return run_sq1_pn(sq_pn, sq_cycle); };
    } else {
      action = [&] { return run_sq1_quadric(sq_quadric, sq_cycle); };
    }
  });

  auto* verify = app.add_subcommand("verify", "Run an exhaustive or randomized verification");
  verify->require_subcommand(1);
  verify->fallthrough();

  int int_pn = 0, int_k = 0;
  long int_trials = 100, int_seed = 0;
  auto* integrality = verify->add_subcommand("integrality", "2*tau_{k-1} integrality on K^(k)");
  integrality->add_option("--pn", int_pn)->required();
  integrality->add_option("--k", int_k)->required();
  integrality->add_option("--trials", int_trials);
  integrality->add_option("--seed", int_seed);
  integrality->callback([&] { action = [&] { return run_integrality(int_pn, int_k, int_trials, int_seed); }; });

  int lb_m = 0, lb_n = 0;
  auto* leibniz = verify->add_subcommand("leibniz", "Leibniz rule on P^M x P^N");
  leibniz->add_option("--m", lb_m)->required();
  leibniz->add_option("--n", lb_n)->required();
  leibniz->callback([&] { action = [&] { return run_leibniz(lb_m, lb_n); }; });

  int nc_dim = 0, nc_i1 = 0;
  auto* nocontam = verify->add_subcommand("nocontam", "Residual cycles never reach the decisive positions");
  nocontam->add_option("--dim", nc_dim)->required();
  nocontam->add_option("--i1", nc_i1)->required();
  nocontam->callback([&] { action = [&] { return run_nocontam(nc_dim, nc_i1); }; });

  int dv_dim = 0;
  auto* derivation = verify->add_subcommand("derivation", "Sq1 nilpotence and the Sq^1 derivation identity");
  derivation->add_option("--dim", dv_dim)->required();
  derivation->callback([&] { action = [&] { return run_derivation(dv_dim); }; });

  int w_dim = 0, w_i1 = 0;
  auto* witt = app.add_subcommand("witt", "Parity test on the first Witt index");
  witt->add_option("--dim-phi", w_dim)->required();
  witt->add_option("--i1", w_i1)->required();
  witt->callback([&] { action = [&] { return run_witt(w_dim, w_i1); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "chowsq: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const Outcome o = action();
    emit(o, json, out);
    return o.exit_code;
  } catch (const UsageError& e) {
    err << "chowsq: " << e.what() << "\n";
    return kUsage;
  } catch (const ConstraintError& e) {
    err << "chowsq: " << e.what() << "\n";
    return kUsage;
  } catch (const NonInvertibleError& e) {
    err << "chowsq: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "chowsq: verification failure: " << e.what() << "\n";
    return kViolation;
  }
}

}  // namespace chowsq::cli
