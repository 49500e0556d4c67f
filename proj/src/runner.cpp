#include "qseal/runner.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include "qseal/report.hpp"

namespace qseal {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

double ellipse_residual(const TradeoffPoint& p) {
  const double lhs =
      (p.f - 2.0 / 3.0) * (p.f - 2.0 / 3.0) + 4.0 * (p.g - 0.5) * (p.g - 0.5);
  return std::abs(lhs - 1.0 / 9.0);
}

void run_device_scenario(const ScenarioConfig& config, RunResult& result) {
  const RepeatingDevice& dev = *config.device;
  json& results = result.report["results"];

  std::optional<TradeoffPoint> bound_point;
  if (dev.rule.kind == RuleKind::ClassicalDecode) {
    const TradeoffPoint p = classical_estimation_fidelity(dev, *config.encoding);
    results["classical"] = to_json(p);
    bound_point = p;
  } else {
    const Alphabet alphabet =
        config.alphabet ? *config.alphabet : Alphabet::haar(dev.instrument.dim());
    if (alphabet.kind == Alphabet::Kind::Discrete) {
      const TradeoffPoint p = average_fidelities_mc(dev, alphabet, 1, RngStream(0, 0));
      results["exact"] = to_json(p);
      bound_point = p;
    } else {
      if (config.mode == "exact" || config.mode == "both") {
        const TradeoffPoint p = average_fidelities_exact(dev);
        results["exact"] = to_json(p);
        bound_point = p;
      }
      if (config.mode == "mc" || config.mode == "both") {
        const TradeoffPoint p =
            average_fidelities_mc(dev, alphabet, config.sampling.samples,
                                  RngStream(config.sampling.seed, 0), config.sampling.workers);
        results["mc"] = to_json(p);
        if (!bound_point) bound_point = p;
      }
    }
  }

  if (!config.applicable.empty() && bound_point) {
    const BoundReport report = evaluate(*bound_point, bound_point->dim, config.applicable);
    results["bounds"] = to_json(report);
    if (config.assert_bounds && !report.all_satisfied()) result.exit_code = 2;
  }
}

void run_seal_scenario(const ScenarioConfig& config, RunResult& result) {
  const SealProtocol& seal = *config.seal;
  json& results = result.report["results"];

  const SealPoint point = evaluate_seal(seal);
  results["seal"] = to_json(point);
  results["perfect_per_encoding"] = classify_perfect(seal);

  if (!config.applicable.empty()) {
    const BoundReport report = evaluate(point, seal.dim_bob(), config.applicable);
    results["bounds"] = to_json(report);
    if (config.assert_bounds && !report.all_satisfied()) result.exit_code = 2;
  }
}

void run_bridge_scenario(const ScenarioConfig& config, RunResult& result) {
  json& results = result.report["results"];

  if (config.device && config.encoding) {
    results["equivalence"] =
        to_json(verify_equivalence(*config.device, *config.encoding, config.tolerances.exact));
  }
  if (config.seal) {
    const SealPoint before = evaluate_seal(*config.seal);
    auto [dev, enc] = seal_to_device(*config.seal);
    const TradeoffPoint point = classical_estimation_fidelity(dev, enc);
    const SealPoint after = evaluate_seal(device_to_seal(dev, enc));
    results["from_seal"] = json{
        {"mode", "exact"},
        {"device_point", to_json(point)},
        {"roundtrip",
         json{{"alpha_diff", std::abs(before.alpha - after.alpha)},
              {"beta_diff", std::abs(before.beta - after.beta)},
              {"pass", std::abs(before.alpha - after.alpha) <= config.tolerances.exact &&
                           std::abs(before.beta - after.beta) <= config.tolerances.exact}}}};
  }
}

void run_bounds_scenario(const ScenarioConfig& config, RunResult& result) {
  json& results = result.report["results"];
  bool all_ok = true;

  if (config.tradeoff_point) {
    const BoundReport report =
        evaluate(*config.tradeoff_point, config.point_dim, config.applicable);
    results["report"] = to_json(report);
    all_ok = all_ok && report.all_satisfied();
  } else if (config.seal_point) {
    const BoundReport report = evaluate(*config.seal_point, config.point_dim, config.applicable);
    results["report"] = to_json(report);
    all_ok = all_ok && report.all_satisfied();
  }

  if (!config.quantum_seal_dims.empty()) {
    json scans = json::array();
    for (int d : config.quantum_seal_dims) {
      const BoundReport report = quantum_seal_bound_scenario(d);
      scans.push_back(json{{"d", d}, {"report", to_json(report)}});
      all_ok = all_ok && report.all_satisfied();
    }
    results["quantum_seal"] = scans;
  }

  if (config.assert_bounds && !all_ok) result.exit_code = 2;
}

void run_frontier_scenario(const ScenarioConfig& config, RunResult& result) {
  json& results = result.report["results"];

  std::vector<FrontierResult> swept;
  json families = json::array();
  for (const FrontierFamilyConfig& fam_config : config.families) {
    const DeviceFamily family = builtin_family(*family_by_name(fam_config.name));
    FrontierResult swept_family = sweep(family, fam_config.grid);

    std::vector<std::string> header{"family"};
    for (const ParamSpec& p : family.params) header.push_back(p.name);
    header.insert(header.end(), {"f", "g", "saturation"});
    std::vector<std::vector<std::string>> rows;
    for (const FrontierSample& s : swept_family.samples) {
      std::vector<std::string> row{family.name};
      for (double t : s.theta) row.push_back(format_float(t));
      row.push_back(format_float(s.point.f));
      row.push_back(format_float(s.point.g));
      row.push_back(swept_family.dim == 2 ? format_float(ellipse_residual(s.point)) : "");
      rows.push_back(std::move(row));
    }
    result.files.emplace_back("frontier_" + family.name + ".csv", to_csv(header, rows));

    json envelope = json::array();
    for (const FrontierSample& s : swept_family.envelope) envelope.push_back(to_json(s));
    families.push_back(json{{"name", family.name},
                            {"grid", fam_config.grid},
                            {"samples", swept_family.samples.size()},
                            {"envelope", envelope}});
    swept.push_back(std::move(swept_family));
  }
  if (!families.empty()) results["families"] = families;

  if (!swept.empty()) {
    const std::vector<RegionRow> region = region_report(swept);
    json region_json = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const RegionRow& row : region) {
      region_json.push_back(json{{"family", row.family},
                                 {"rule", rule_kind_name(row.kind)},
                                 {"theta", row.sample.theta},
                                 {"point", to_json(row.sample.point)},
                                 {"bounds", to_json(row.bounds)}});
      for (const BoundCheck& c : row.bounds.checks) {
        rows.push_back({row.family, rule_kind_name(row.kind), format_float(row.sample.point.f),
                        format_float(row.sample.point.g), bound_name(c.id), format_float(c.lhs),
                        format_float(c.rhs), format_float(c.margin),
                        c.satisfied ? "true" : "false"});
      }
    }
    results["region"] = region_json;
    result.files.emplace_back(
        "region.csv",
        to_csv({"family", "rule", "f", "g", "bound", "lhs", "rhs", "margin", "satisfied"}, rows));
  }

  if (config.maximize) {
    const DeviceFamily family = builtin_family(*family_by_name(config.maximize->family));
    json entries = json::array();
    for (double f_min : config.maximize->f_min) {
      const auto [theta, point] = maximize_g_at_f(family, f_min);
      entries.push_back(json{{"f_min", f_min}, {"theta", theta}, {"point", to_json(point)}});
    }
    results["maximize"] = json{{"family", family.name}, {"entries", entries}};
  }
}

void run_paper_table_scenario(const ScenarioConfig& config, RunResult& result) {
  (void)config;
  json table = json::array();
  std::vector<std::vector<std::string>> rows;

  const auto add_quantum = [&](const std::string& name, const TradeoffPoint& p) {
    table.push_back(json{{"row", name},
                         {"kind", "device_quantum"},
                         {"d", p.dim},
                         {"f", tagged_exact(p.f)},
                         {"g", tagged_exact(p.g)}});
    rows.push_back({name, "device_quantum", std::to_string(p.dim), format_float(p.f),
                    format_float(p.g), "", ""});
  };
  const auto add_classical = [&](const std::string& name, const RepeatingDevice& dev,
                                 const ClassicalEncoding& enc) {
    const TradeoffPoint p = classical_estimation_fidelity(dev, enc);
    const SealPoint s = evaluate_seal(device_to_seal(dev, enc));
    table.push_back(json{{"row", name},
                         {"kind", "device_classical"},
                         {"d", p.dim},
                         {"f", tagged_exact(p.f)},
                         {"g", tagged_exact(p.g)},
                         {"alpha", tagged_exact(s.alpha)},
                         {"beta", tagged_exact(s.beta)}});
    rows.push_back({name, "device_classical", std::to_string(p.dim), format_float(p.f),
                    format_float(p.g), format_float(s.alpha), format_float(s.beta)});
  };
  const auto add_seal = [&](const std::string& name, BuiltinSeal which, bool with_device) {
    const SealProtocol protocol = builtin_seal(which);
    const SealPoint s = evaluate_seal(protocol);
    json row{{"row", name},
             {"kind", "seal"},
             {"d", protocol.dim_bob()},
             {"alpha", tagged_exact(s.alpha)},
             {"beta", tagged_exact(s.beta)}};
    std::string f_cell, g_cell;
    if (with_device) {
      auto [dev, enc] = seal_to_device(protocol);
      const TradeoffPoint p = classical_estimation_fidelity(dev, enc);
      row["f"] = tagged_exact(p.f);
      row["g"] = tagged_exact(p.g);
      f_cell = format_float(p.f);
      g_cell = format_float(p.g);
    }
    table.push_back(row);
    rows.push_back({name, "seal", std::to_string(protocol.dim_bob()), f_cell, g_cell,
                    format_float(s.alpha), format_float(s.beta)});
  };

  for (int d = 2; d <= 6; ++d) {
    add_quantum("do_nothing(d=" + std::to_string(d) + ")",
                average_fidelities_exact(builtin_device(BuiltinDevice::DoNothing, {.dim = d})));
  }
  for (int d = 2; d <= 6; ++d) {
    add_quantum(
        "measure_reprepare(d=" + std::to_string(d) + ")",
        average_fidelities_exact(builtin_device(BuiltinDevice::MeasureReprepare, {.dim = d})));
  }
  add_classical("breidbart+bb84", builtin_device(BuiltinDevice::Breidbart),
                builtin_encoding(BuiltinEncoding::Bb84));
  add_classical("basis_decode+simplified", builtin_device(BuiltinDevice::BasisDecode),
                builtin_encoding(BuiltinEncoding::Simplified));
  add_classical("basis_decode+orthogonal", builtin_device(BuiltinDevice::BasisDecode),
                builtin_encoding(BuiltinEncoding::Orthogonal));
  add_seal("optimal_qbs", BuiltinSeal::OptimalQbs, false);
  add_seal("simplified_seal", BuiltinSeal::SimplifiedSeal, true);
  add_seal("perfect_seal", BuiltinSeal::PerfectSeal, true);

  result.report["results"]["table"] = table;
  result.files.emplace_back(
      "paper_table.csv", to_csv({"row", "kind", "d", "f", "g", "alpha", "beta"}, rows));
}

void run_verify_all_scenario(const ScenarioConfig& config, RunResult& result) {
  AcceptanceTolerances tol;
  tol.exact = config.tolerances.exact;
  tol.mc_sigmas = config.tolerances.mc_sigmas;
  result.criteria = verify_all(tol);

  json criteria = json::array();
  bool all_passed = true;
  for (const CriterionResult& c : result.criteria) {
    criteria.push_back(json{{"index", c.index},
                            {"name", c.name},
                            {"passed", c.passed},
                            {"statistical", c.statistical},
                            {"detail", c.detail}});
    all_passed = all_passed && c.passed;
  }
  result.report["results"]["criteria"] = criteria;
  result.report["results"]["all_passed"] = all_passed;
  if (!all_passed) result.exit_code = 2;
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& config) {
  const auto start = std::chrono::steady_clock::now();

  RunResult result;
  result.report["config"] = config.echo;
  result.report["results"] = json::object();

  switch (config.kind) {
    case ScenarioKind::Device: run_device_scenario(config, result); break;
    case ScenarioKind::Seal: run_seal_scenario(config, result); break;
    case ScenarioKind::Bridge: run_bridge_scenario(config, result); break;
    case ScenarioKind::Bounds: run_bounds_scenario(config, result); break;
    case ScenarioKind::Frontier: run_frontier_scenario(config, result); break;
    case ScenarioKind::PaperTable: run_paper_table_scenario(config, result); break;
    case ScenarioKind::VerifyAll: run_verify_all_scenario(config, result); break;
  }

  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);
  result.report["provenance"] = json{{"version", kVersion},
                                     {"seed", config.sampling.seed},
                                     {"workers", config.sampling.workers},
                                     {"wall_time_ms", elapsed.count()}};
  return result;
}

void write_run_outputs(const RunResult& result, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto write = [&](const std::string& name, const std::string& content) {
    const std::filesystem::path path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write output file '" + path.string() + "'");
    out << content;
  };
  write("report.json", result.report.dump(2) + "\n");
  for (const auto& [name, content] : result.files) write(name, content);
}

}  // namespace qseal
