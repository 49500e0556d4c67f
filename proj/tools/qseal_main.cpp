// Command-line runner for the quantum repeating-device / quantum seal models:
// scenario execution from JSON configs, the full verification suite, and a
// catalog of the built-in devices, encodings, seals and families.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qseal/report.hpp"
#include "qseal/runner.hpp"

namespace {

using namespace qseal;

void print_criteria(const std::vector<CriterionResult>& criteria) {
  for (const CriterionResult& c : criteria) {
    const char* verdict = c.passed ? "PASS" : (c.statistical ? "FAIL (statistical)" : "FAIL");
    std::printf("[%s] %2d: %s -- %s\n", verdict, c.index, c.name.c_str(), c.detail.c_str());
  }
}

int cmd_run(const std::string& config_path, const ConfigOverrides& overrides) {
  ScenarioConfig config = load_config_file(config_path);
  apply_overrides(config, overrides);
  const RunResult result = run_scenario(config);
  write_run_outputs(result, config.out_dir);
  if (!result.criteria.empty()) print_criteria(result.criteria);
  std::printf("report written to %s/report.json\n", config.out_dir.c_str());
  for (const auto& [name, content] : result.files) {
    std::printf("wrote %s/%s\n", config.out_dir.c_str(), name.c_str());
  }
  return result.exit_code;
}

int cmd_verify_all(double tol_exact, double tol_mc) {
  AcceptanceTolerances tol;
  tol.exact = tol_exact;
  tol.mc_sigmas = tol_mc;
  const std::vector<CriterionResult> criteria = verify_all(tol);
  print_criteria(criteria);
  bool all = true;
  for (const CriterionResult& c : criteria) all = all && c.passed;
  std::printf("%s\n", all ? "all criteria passed" : "some criteria FAILED");
  return all ? 0 : 2;
}

int cmd_list_builtins() {
  std::printf("devices:\n");
  for (const std::string& name : builtin_device_names()) std::printf("  %s\n", name.c_str());
  std::printf("encodings:\n");
  for (const std::string& name : builtin_encoding_names()) std::printf("  %s\n", name.c_str());
  std::printf("seals:\n");
  for (const std::string& name : builtin_seal_names()) std::printf("  %s\n", name.c_str());
  std::printf("families:\n");
  for (const std::string& name : builtin_family_names()) std::printf("  %s\n", name.c_str());
  std::printf("bounds:\n");
  for (const std::string& name : bound_names()) std::printf("  %s\n", name.c_str());
  return 0;
}

void print_matrix(const ComplexMatrix& m, const char* indent) {
  for (int i = 0; i < m.rows(); ++i) {
    std::printf("%s[", indent);
    for (int j = 0; j < m.cols(); ++j) {
      const Complex v = m.at(i, j);
      std::printf("%s(%.6g%+.6gi)", j ? " " : "", v.real(), v.imag());
    }
    std::printf("]\n");
  }
}

void print_state(const PureState& s, const char* indent) {
  std::printf("%s[", indent);
  for (int i = 0; i < s.dim(); ++i) {
    std::printf("%s(%.6g%+.6gi)", i ? " " : "", s.amp(i).real(), s.amp(i).imag());
  }
  std::printf("]\n");
}

int cmd_describe(const std::string& name) {
  if (const auto device = device_by_name(name)) {
    const RepeatingDevice dev = builtin_device(*device);
    std::printf("device %s (dim %d, %s)\n", name.c_str(), dev.instrument.dim(),
                rule_kind_name(dev.rule.kind).c_str());
    for (const auto& [label, m] : dev.instrument.kraus()) {
      std::printf("  outcome %d:\n", label);
      print_matrix(m, "    ");
      if (dev.rule.kind == RuleKind::QuantumEstimate) {
        std::printf("    estimate: ");
        print_state(dev.rule.quantum_map.at(label), "");
      } else {
        const int target = dev.rule.classical_map.at(label);
        if (target == kUnidentified) std::printf("    decodes to: unidentified\n");
        else std::printf("    decodes to: %d\n", target);
      }
    }
    if (dev.rule.kind == RuleKind::QuantumEstimate) {
      const TradeoffPoint p = average_fidelities_exact(dev);
      std::printf("  exact Haar averages: F = %s, G = %s\n", format_float(p.f).c_str(),
                  format_float(p.g).c_str());
    }
    if (*device == BuiltinDevice::WeakFamily) {
      std::printf("  parameter: lambda in [0, 0.5] (shown at lambda = 0)\n");
    }
    return 0;
  }
  if (const auto encoding = encoding_by_name(name)) {
    const ClassicalEncoding enc = builtin_encoding(*encoding);
    std::printf("encoding %s (%d symbols, dim %d)\n", name.c_str(), enc.num_symbols(), enc.dim());
    for (int b = 0; b < enc.num_symbols(); ++b) {
      std::printf("  symbol %d (prior %.6g):\n", b, enc.prior[b]);
      for (const auto& [state, p] : enc.table[b]) {
        std::printf("    p = %.6g, state: ", p);
        print_state(state, "");
      }
    }
    return 0;
  }
  if (const auto seal = seal_by_name(name)) {
    const SealProtocol p = builtin_seal(*seal);
    const SealPoint point = evaluate_seal(p);
    std::printf("seal %s (owner dim %d, reader dim %d, %d values)\n", name.c_str(), p.dim_alice(),
                p.dim_bob(), p.num_values());
    for (const SealEncoding& e : p.encodings()) {
      std::printf("  value %d (weight %.6g): ", e.value, e.weight);
      print_state(e.state, "");
    }
    std::printf("  alpha = %s, beta = %s\n", format_float(point.alpha).c_str(),
                format_float(point.beta).c_str());
    return 0;
  }
  if (const auto family = family_by_name(name)) {
    const DeviceFamily fam = builtin_family(*family);
    std::printf("family %s (%s, dim %d)\n", name.c_str(), rule_kind_name(fam.kind).c_str(),
                fam.dim);
    for (const ParamSpec& p : fam.params) {
      std::printf("  parameter %s in [%.6g, %.6g]\n", p.name.c_str(), p.lo, p.hi);
    }
    return 0;
  }
  std::fprintf(stderr, "unknown builtin '%s' (see list-builtins)\n", name.c_str());
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum repeating-device and quantum seal tradeoff toolbox"};
  app.require_subcommand(1);

  std::string config_path;
  ConfigOverrides overrides;
  std::uint64_t seed = 0;
  long long samples = 0;
  int workers = 0;
  std::string out_dir;
  double tol_exact_flag = 0.0;
  double tol_mc_flag = 0.0;

  CLI::App* run = app.add_subcommand("run", "execute a scenario config");
  run->add_option("--config", config_path, "path to the scenario JSON document")
      ->required()
      ->check(CLI::ExistingFile);
  auto* seed_opt = run->add_option("--seed", seed, "override the sampling seed");
  auto* samples_opt = run->add_option("--samples", samples, "override the MC sample count");
  auto* workers_opt = run->add_option("--workers", workers, "override the MC worker count");
  auto* out_opt = run->add_option("--out", out_dir, "override the output directory");
  auto* tol_exact_opt = run->add_option("--tol-exact", tol_exact_flag,
                                        "override the exact-identity tolerance");
  auto* tol_mc_opt =
      run->add_option("--tol-mc", tol_mc_flag, "override the MC tolerance (standard errors)");

  double va_tol_exact = 1e-12;
  double va_tol_mc = 4.0;
  CLI::App* verify = app.add_subcommand("verify-all", "run the full verification suite");
  verify->add_option("--tol-exact", va_tol_exact, "exact-identity tolerance");
  verify->add_option("--tol-mc", va_tol_mc, "MC tolerance in standard errors");

  CLI::App* list = app.add_subcommand("list-builtins", "list built-in models");

  std::string describe_name;
  CLI::App* describe = app.add_subcommand("describe", "describe one built-in model");
  describe->add_option("name", describe_name, "builtin name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (*seed_opt) overrides.seed = seed;
      if (*samples_opt) overrides.samples = samples;
      if (*workers_opt) overrides.workers = workers;
      if (*out_opt) overrides.out_dir = out_dir;
      if (*tol_exact_opt) overrides.tol_exact = tol_exact_flag;
      if (*tol_mc_opt) overrides.tol_mc_sigmas = tol_mc_flag;
      return cmd_run(config_path, overrides);
    }
    if (verify->parsed()) return cmd_verify_all(va_tol_exact, va_tol_mc);
    if (list->parsed()) return cmd_list_builtins();
    if (describe->parsed()) return cmd_describe(describe_name);
  } catch (const qseal::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return 1;
  }
  return 0;
}
