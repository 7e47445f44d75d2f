#pragma once

// Config-driven batch runner behind the command-line tool: builds spaces and
// energies from JSON, executes check suites, and assembles one deterministic
// JSON report.  Byte-identical configs and seeds produce byte-identical
// reports; no timestamps or machine-varying data enter the output.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "dirichlet/checks.hpp"
#include "dirichlet/contractions.hpp"
#include "dirichlet/core.hpp"
#include "dirichlet/energy.hpp"
#include "dirichlet/flow.hpp"
#include "dirichlet/oracles.hpp"
#include "dirichlet/prox.hpp"

namespace dirichlet {

using json = nlohmann::ordered_json;

/// Config validation failure; `field` names the offending entry.
struct ConfigError : std::runtime_error {
  std::string field;
  ConfigError(std::string f, const std::string& message)
      : std::runtime_error(f + ": " + message), field(std::move(f)) {}
};

namespace cfg {

inline const json& require(const json& obj, const std::string& key, const std::string& ctx) {
  if (!obj.is_object() || !obj.contains(key)) throw ConfigError(ctx + "." + key, "missing field");
  return obj.at(key);
}

inline double number(const json& obj, const std::string& key, const std::string& ctx) {
  const json& v = require(obj, key, ctx);
  if (!v.is_number()) throw ConfigError(ctx + "." + key, "expected a number");
  return v.get<double>();
}

inline double number_or(const json& obj, const std::string& key, double fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  return obj.at(key).get<double>();
}

inline std::vector<double> number_list(const json& obj, const std::string& key,
                                       const std::string& ctx) {
  const json& v = require(obj, key, ctx);
  if (!v.is_array()) throw ConfigError(ctx + "." + key, "expected an array of numbers");
  return v.get<std::vector<double>>();
}

inline Field field_from_json(const SpacePtr& space, const json& v, const std::string& ctx) {
  if (!v.is_array()) throw ConfigError(ctx, "expected a flat array of numbers");
  return Field(space, v.get<std::vector<double>>());
}

inline PointSubset subset_from_json(const json& v, const std::string& ctx) {
  if (!v.is_array()) throw ConfigError(ctx, "expected an array of point indices");
  return v.get<PointSubset>();
}

}  // namespace cfg

inline json space_to_json(const MeasureSpace& s) {
  return {{"points", s.points()}, {"weights", s.weights()}};
}

inline SpacePtr space_from_json(const json& v, const std::string& ctx = "space") {
  return MeasureSpace::make(cfg::require(v, "points", ctx).get<std::vector<std::string>>(),
                            cfg::require(v, "weights", ctx).get<std::vector<double>>());
}

/// E(u) = |u|_m^2; prox g = f/(1 + 2 lambda).  The usual Luxembourg base.
inline EnergyFunctional make_squared_l2_norm(SpacePtr space) {
  EnergyFunctional e;
  e.space = space;
  e.name = "squared_l2_norm";
  e.evaluate = [](const Field& u) -> EnergyValue { return inner(u, u); };
  e.subgradient = [](const Field& u) { return scale(2.0, u); };
  e.capability = ProxCapability::kClosedForm;
  e.closed_form_prox = [](const Field& f, double lambda) {
    return scale(1.0 / (1.0 + 2.0 * lambda), f);
  };
  e.smooth_lipschitz = 2.0;
  e.witness_values.assign(space->size(), 0.0);
  e.even = true;
  e.grounded = true;
  e.translation_invariant = false;
  e.full_domain = true;
  return e;
}

inline EnergyFunctional energy_from_json(const json& spec, const SpacePtr& config_space,
                                         const std::string& ctx = "energy") {
  const std::string kind = cfg::require(spec, "kind", ctx).get<std::string>();
  auto need_space = [&]() -> SpacePtr {
    if (spec.contains("space")) return space_from_json(spec.at("space"), ctx + ".space");
    if (config_space) return config_space;
    throw ConfigError(ctx + ".space", "kind '" + kind + "' needs a space");
  };
  if (kind == "graph_p_energy") {
    SpacePtr s = need_space();
    const json& ej = cfg::require(spec, "edges", ctx);
    std::vector<Edge> edges;
    for (const json& row : ej) {
      if (!row.is_array() || row.size() != 3)
        throw ConfigError(ctx + ".edges", "each edge must be [i, j, w]");
      edges.push_back({row[0].get<std::size_t>(), row[1].get<std::size_t>(), row[2].get<double>()});
    }
    return make_graph_p_energy(s, std::move(edges), cfg::number(spec, "p", ctx));
  }
  if (kind == "box_h1") return make_box_h1(static_cast<std::size_t>(cfg::number(spec, "n", ctx)));
  if (kind == "one_sided_slope")
    return make_one_sided_slope(static_cast<std::size_t>(cfg::number(spec, "n", ctx)));
  if (kind == "r2_quadratic_box") return make_r2_quadratic_box();
  if (kind == "r2_linear_box") return make_r2_linear_box();
  if (kind == "squared_l2_norm") return make_squared_l2_norm(need_space());
  if (kind == "luxembourg")
    return make_luxembourg(
        energy_from_json(cfg::require(spec, "base", ctx), config_space, ctx + ".base"));
  if (kind == "restricted")
    return restrict_to_subspace(
        energy_from_json(cfg::require(spec, "base", ctx), config_space, ctx + ".base"),
        cfg::subset_from_json(cfg::require(spec, "subset", ctx), ctx + ".subset"));
  if (kind == "grounded")
    return ground_energy(
        energy_from_json(cfg::require(spec, "base", ctx), config_space, ctx + ".base"));
  throw ConfigError(ctx + ".kind", "unknown energy kind '" + kind + "'");
}

inline ScalarContraction contraction_from_json(const json& spec, const std::string& ctx) {
  const std::string kind = cfg::require(spec, "kind", ctx).get<std::string>();
  auto alpha = [&]() { return cfg::number(spec, "alpha", ctx); };
  if (kind == "identity") return identity_contraction();
  if (kind == "zero") return zero_contraction();
  if (kind == "scale") return scale_contraction(cfg::number(spec, "c", ctx));
  if (kind == "clamp") return clamp_contraction(alpha());
  if (kind == "psi_alpha") return psi_alpha(alpha());
  if (kind == "abs_shift") return abs_shift(alpha());
  if (kind == "pos_shift") return pos_shift(alpha());
  if (kind == "neg_shift") return neg_shift(alpha());
  if (kind == "abs") return abs_contraction();
  if (kind == "pos") return pos_part_contraction();
  if (kind == "neg") return neg_part_contraction();
  if (kind == "min_const") return min_const(alpha());
  throw ConfigError(ctx + ".kind", "unknown contraction kind '" + kind + "'");
}

inline Sampler sampler_from_json(const json& spec, std::uint64_t default_seed,
                                 const std::string& ctx) {
  Sampler s;
  const std::string strat = cfg::require(spec, "strategy", ctx).get<std::string>();
  if (strat == "iid_gaussian") s.strategy = SampleStrategy::kIidGaussian;
  else if (strat == "ordered_pairs") s.strategy = SampleStrategy::kOrderedPairs;
  else if (strat == "stripe_pairs") s.strategy = SampleStrategy::kStripePairs;
  else if (strat == "disjoint_support_pairs") s.strategy = SampleStrategy::kDisjointSupportPairs;
  else if (strat == "shifted_pairs") s.strategy = SampleStrategy::kShiftedPairs;
  else throw ConfigError(ctx + ".strategy", "unknown strategy '" + strat + "'");
  s.count = static_cast<int>(cfg::number(spec, "count", ctx));
  s.magnitude = cfg::number_or(spec, "magnitude", 1.0);
  s.stripe_alpha = cfg::number_or(spec, "stripe_alpha", 1.0);
  s.seed = spec.contains("seed") ? spec.at("seed").get<std::uint64_t>() : default_seed;
  if (spec.contains("support"))
    s.support = cfg::subset_from_json(spec.at("support"), ctx + ".support");
  return s;
}

inline ProxConfig prox_config_from_json(const json& spec) {
  ProxConfig c;
  if (!spec.is_object()) return c;
  c.tol = cfg::number_or(spec, "tol", c.tol);
  c.max_iter = static_cast<long>(cfg::number_or(spec, "max_iter", static_cast<double>(c.max_iter)));
  c.vi_check_samples =
      static_cast<int>(cfg::number_or(spec, "vi_check_samples", c.vi_check_samples));
  return c;
}

inline json check_report_to_json(const CheckReport& r, std::uint64_t seed) {
  json j;
  j["check"] = r.check_name;
  j["verdict"] = to_string(r.verdict);
  j["max_violation"] = r.max_violation;
  j["tolerance"] = r.tolerance_used;
  j["witness"] = r.witness;
  j["samples"] = r.samples_evaluated;
  j["seed"] = seed;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

namespace detail {

inline FieldOperator operator_from_json(const json& spec, const EnergyFunctional& e,
                                        const ProxConfig& solver, const std::string& ctx) {
  const std::string type = cfg::require(spec, "type", ctx).get<std::string>();
  if (type == "identity") return [](const Field& f) { return f; };
  if (type == "scale") {
    const double c = cfg::number(spec, "factor", ctx);
    return [c](const Field& f) { return scale(c, f); };
  }
  if (type == "clamp01")
    return [](const Field& f) {
      return map_field(f, [](double t) { return std::min(std::max(t, 0.0), 1.0); });
    };
  if (type == "resolvent") {
    const double lam = cfg::number(spec, "lambda", ctx);
    EnergyFunctional en = e;
    ProxConfig pc = solver;
    return [en, pc, lam](const Field& f) { return prox(en, f, lam, pc).minimizer; };
  }
  if (type == "semigroup") {
    const double t = cfg::number(spec, "t", ctx);
    const double tol = cfg::number_or(spec, "tol", 1e-6);
    EnergyFunctional en = e;
    ProxConfig pc = solver;
    return [en, pc, t, tol](const Field& f) { return flow(en, f, t, tol, pc).value; };
  }
  throw ConfigError(ctx + ".type", "unknown operator type '" + type + "'");
}

inline std::vector<ScalarContraction> contraction_list(const json& spec, const std::string& key,
                                                       const std::string& ctx) {
  const json& arr = cfg::require(spec, key, ctx);
  if (!arr.is_array()) throw ConfigError(ctx + "." + key, "expected an array");
  std::vector<ScalarContraction> out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(contraction_from_json(arr[i], ctx + "." + key + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

/// Executes one suite entry; returns the sub-reports it produced.
inline std::vector<CheckReport> run_suite(const json& suite, const EnergyFunctional& e,
                                          const ProxConfig& solver, std::uint64_t default_seed,
                                          const std::string& ctx) {
  std::string check = cfg::require(suite, "check", ctx).get<std::string>();
  if (check.rfind("check_", 0) == 0) check = check.substr(6);  // both spellings accepted
  auto sampler = [&]() {
    return sampler_from_json(cfg::require(suite, "sampler", ctx), default_seed, ctx + ".sampler");
  };
  auto alphas = [&]() { return cfg::number_list(suite, "alphas", ctx); };

  if (check == "lattice_contraction") {
    std::vector<FieldPair> pinned;
    if (suite.contains("pairs")) {
      const json& ps = suite.at("pairs");
      for (std::size_t i = 0; i < ps.size(); ++i) {
        pinned.emplace_back(
            cfg::field_from_json(e.space, cfg::require(ps[i], "u", ctx), ctx + ".pairs.u"),
            cfg::field_from_json(e.space, cfg::require(ps[i], "v", ctx), ctx + ".pairs.v"));
      }
    }
    return {check_lattice_contraction(e, sampler(), pinned)};
  }
  if (check == "strong_unit_contraction")
    return {check_strong_unit_contraction(e, sampler(), alphas())};
  if (check == "one_sided_unit_contraction") {
    const std::string side = cfg::require(suite, "side", ctx).get<std::string>();
    if (side != "upper" && side != "lower")
      throw ConfigError(ctx + ".side", "expected 'upper' or 'lower'");
    return {check_one_sided_unit_contraction(
        e, side == "upper" ? Side::kPlus : Side::kMinus, sampler(), alphas())};
  }
  if (check == "claus")
    return {check_claus(e, sampler(), detail::contraction_list(suite, "psis", ctx))};
  if (check == "puchert")
    return {check_puchert(e, sampler(), detail::contraction_list(suite, "phis", ctx))};
  if (check == "lipschitz_contraction")
    return {check_lipschitz_contraction(e, sampler(), detail::contraction_list(suite, "phis", ctx))};
  if (check == "dirichlet_operator")
    return {check_dirichlet_operator(e, cfg::number(suite, "lambda_small", ctx), sampler(), solver)};
  if (check == "order_preserving_operator" || check == "linf_nonexpansive_operator") {
    FieldOperator op = detail::operator_from_json(cfg::require(suite, "operator", ctx), e, solver,
                                                  ctx + ".operator");
    return {check == "order_preserving_operator"
                ? check_order_preserving_operator(op, e.space, sampler())
                : check_linf_nonexpansive_operator(op, e.space, sampler())};
  }
  if (check == "weak_locality") return check_weak_locality(e, sampler());
  if (check == "strong_locality") return check_strong_locality(e, sampler(), alphas());
  if (check == "invariance") {
    std::vector<Field> probes;
    if (suite.contains("probes"))
      for (const json& p : suite.at("probes"))
        probes.push_back(cfg::field_from_json(e.space, p, ctx + ".probes"));
    return check_invariance(
        e, cfg::subset_from_json(cfg::require(suite, "subset", ctx), ctx + ".subset"),
        cfg::number_list(suite, "t_list", ctx), cfg::number_list(suite, "lambda_list", ctx),
        sampler(), solver, probes);
  }
  if (check == "plain_invariance")
    return {check_plain_invariance(
        e, cfg::subset_from_json(cfg::require(suite, "subset", ctx), ctx + ".subset"),
        cfg::number_list(suite, "t_list", ctx), sampler(), solver)};
  if (check == "continuity_at_zero")
    return {check_continuity_at_zero(
        e, cfg::field_from_json(e.space, cfg::require(suite, "field", ctx), ctx + ".field"),
        alphas())};
  if (check == "odd_even_consistency")
    return {check_odd_even_consistency(e, cfg::number_list(suite, "t_list", ctx),
                                       cfg::number_list(suite, "lambda_list", ctx), sampler(),
                                       solver)};
  throw ConfigError(ctx + ".check", "unknown check '" + check + "'");
}

struct RunOutput {
  json report;
  int exit_code = 0;  // 0 pass, 1 config error, 2 failures, 3 indeterminate
  std::vector<std::pair<std::string, std::vector<double>>> per_sample;  // for CSV dumps
};

/// Executes a full config.  Suites run concurrently up to `workers`; report
/// order follows config order regardless of scheduling.
inline RunOutput run_config(const json& config, int workers = 1) {
  RunOutput out;
  const std::uint64_t master_seed = [&] {
    if (!config.contains("seed")) throw ConfigError("seed", "missing field (no entropy without it)");
    return config.at("seed").get<std::uint64_t>();
  }();

  SpacePtr space;
  if (config.contains("space")) space = space_from_json(config.at("space"));
  const EnergyFunctional energy =
      energy_from_json(cfg::require(config, "energy", "config"), space);
  const ProxConfig solver =
      prox_config_from_json(config.contains("solver") ? config.at("solver") : json());

  const json suites = config.contains("suites") ? config.at("suites") : json::array();
  if (!suites.is_array()) throw ConfigError("suites", "expected an array");

  std::vector<std::vector<CheckReport>> results(suites.size());
  std::vector<std::string> errors(suites.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= suites.size()) return;
      const std::string ctx = "suites[" + std::to_string(i) + "]";
      try {
        results[i] = run_suite(suites[i], energy, solver,
                               master_seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)), ctx);
      } catch (const ConfigError& ce) {
        errors[i] = std::string("config error at ") + ce.field + ": " + ce.what();
      } catch (const std::exception& ex) {
        errors[i] = ctx + ": " + ex.what();
      }
    }
  };
  if (workers <= 1 || suites.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    const int n = std::min<int>(workers, static_cast<int>(suites.size()));
    pool.reserve(n);
    for (int i = 0; i < n; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < suites.size(); ++i)
    if (!errors[i].empty()) throw ConfigError("suites[" + std::to_string(i) + "]", errors[i]);

  const std::string config_dump = config.dump();
  json report;
  report["version"] = 1;
  report["config_hash"] = [&] {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(config_dump.data(), config_dump.size())));
    return std::string("fnv1a:") + buf;
  }();
  report["seed"] = master_seed;
  report["space"] = space_to_json(*energy.space);
  report["energy"] = config.at("energy");
  report["energy_name"] = energy.name;
  report["properness_witness"] = energy.witness_values;
  report["tolerances"] = {{"exact_identity", kExactIdentityTol},
                          {"energy_inequality", kEnergyInequalityTol},
                          {"solver", kSolverCheckTol}};
  report["solver"] = {{"tol", solver.tol},
                      {"max_iter", solver.max_iter},
                      {"vi_check_samples", solver.vi_check_samples}};
  report["environment"] = {{"compiler", __VERSION__}, {"floating_point", "ieee754-binary64"}};

  long n_pass = 0, n_fail = 0, n_ind = 0;
  json suite_reports = json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const std::uint64_t seed = master_seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));
    for (const CheckReport& r : results[i]) {
      suite_reports.push_back(check_report_to_json(r, seed));
      out.per_sample.emplace_back(std::to_string(i) + "_" + r.check_name, r.per_sample);
      switch (r.verdict) {
        case Verdict::kPass: ++n_pass; break;
        case Verdict::kFail: ++n_fail; break;
        case Verdict::kIndeterminate: ++n_ind; break;
      }
    }
  }
  report["suites"] = std::move(suite_reports);
  out.exit_code = n_fail > 0 ? 2 : (n_ind > 0 ? 3 : 0);
  report["summary"] = {{"pass", n_pass}, {"fail", n_fail}, {"indeterminate", n_ind},
                       {"exit_code", out.exit_code}};
  out.report = std::move(report);
  return out;
}

/// Stable listing of energy kinds, checks, and sampler strategies with their
/// parameter schemas.
inline std::string list_builtins_text() {
  std::ostringstream os;
  os << "energy kinds:\n"
     << "  box_h1               {n}\n"
     << "  graph_p_energy       {space|config space, edges: [[i,j,w]...], p >= 1}\n"
     << "  grounded             {base: <energy>}\n"
     << "  luxembourg           {base: <energy>, base grounded with E(0) <= 1}\n"
     << "  one_sided_slope      {n}\n"
     << "  r2_linear_box        {}\n"
     << "  r2_quadratic_box     {}\n"
     << "  restricted           {base: <energy>, subset: [indices]}\n"
     << "  squared_l2_norm      {space|config space}\n"
     << "checks:\n"
     << "  check_claus                       {sampler, psis: [<contraction>...]}\n"
     << "  check_continuity_at_zero          {field, alphas}\n"
     << "  check_dirichlet_operator          {sampler, lambda_small}\n"
     << "  check_invariance                  {sampler, subset, t_list, lambda_list, probes?}\n"
     << "  check_lattice_contraction         {sampler, pairs?}\n"
     << "  check_linf_nonexpansive_operator  {sampler, operator}\n"
     << "  check_lipschitz_contraction       {sampler, phis}\n"
     << "  check_odd_even_consistency        {sampler, t_list, lambda_list}\n"
     << "  check_one_sided_unit_contraction  {sampler, side: upper|lower, alphas}\n"
     << "  check_order_preserving_operator   {sampler: ordered_pairs, operator}\n"
     << "  check_plain_invariance            {sampler, subset, t_list}\n"
     << "  check_strong_locality             {sampler: shifted_pairs, alphas}\n"
     << "  check_strong_unit_contraction     {sampler, alphas}\n"
     << "  check_weak_locality               {sampler: disjoint_support_pairs}\n"
     << "  (the check_ prefix is optional in configs)\n"
     << "sampler strategies:\n"
     << "  iid_gaussian | ordered_pairs | stripe_pairs | disjoint_support_pairs | shifted_pairs\n"
     << "  fields: {strategy, count, magnitude?, seed?, stripe_alpha?, support?}\n"
     << "contraction kinds:\n"
     << "  identity | zero | scale{c} | clamp{alpha} | psi_alpha{alpha} | abs_shift{alpha}\n"
     << "  pos_shift{alpha} | neg_shift{alpha} | abs | pos | neg | min_const{alpha}\n"
     << "operators (for operator checks):\n"
     << "  identity | scale{factor} | clamp01 | resolvent{lambda} | semigroup{t, tol?}\n";
  return os.str();
}

/// CSV trace of the flow from the config's initial field: one row per grid
/// time with the field components and the Yoshida envelope value at the
/// config's smallest lambda.
inline std::string flow_trace_csv(const json& config, const std::vector<double>& t_grid) {
  SpacePtr space;
  if (config.contains("space")) space = space_from_json(config.at("space"));
  const EnergyFunctional energy =
      energy_from_json(cfg::require(config, "energy", "config"), space);
  const ProxConfig solver =
      prox_config_from_json(config.contains("solver") ? config.at("solver") : json());
  const json& fj = cfg::require(config, "flow", "config");
  const Field f0 =
      cfg::field_from_json(energy.space, cfg::require(fj, "initial", "config.flow"), "config.flow.initial");
  std::vector<double> lambdas = fj.contains("lambda_list")
                                    ? fj.at("lambda_list").get<std::vector<double>>()
                                    : std::vector<double>{cfg::number(fj, "lambda", "config.flow")};
  const double lam = *std::min_element(lambdas.begin(), lambdas.end());
  const double tol = cfg::number_or(fj, "tol", 1e-6);

  std::ostringstream os;
  os.precision(17);
  os << "t";
  for (const std::string& p : energy.space->points()) os << "," << p;
  os << ",E_lambda\n";
  for (double t : t_grid) {
    const Field ft = flow(energy, f0, t, tol, solver).value;
    os << t;
    for (double v : ft.values()) os << "," << v;
    os << "," << prox(energy, ft, lam, solver).objective << "\n";
  }
  return os.str();
}

}  // namespace dirichlet
