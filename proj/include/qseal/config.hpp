#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "qseal/bounds.hpp"
#include "qseal/bridge.hpp"
#include "qseal/frontier.hpp"

namespace qseal {

enum class ScenarioKind { Device, Seal, Bridge, Bounds, Frontier, VerifyAll, PaperTable };

struct SamplingConfig {
  long long samples = 100000;
  std::uint64_t seed = 1;
  int workers = 1;
};

struct ToleranceConfig {
  double exact = 1e-12;
  double mc_sigmas = 4.0;
};

struct FrontierFamilyConfig {
  std::string name;
  std::vector<int> grid;
};

struct FrontierMaximizeConfig {
  std::string family;
  std::vector<double> f_min;
};

// Fully validated scenario: domain objects are constructed during parsing, so
// an invalid document never reaches the runner.
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::VerifyAll;
  nlohmann::json echo;

  std::optional<RepeatingDevice> device;
  std::optional<Alphabet> alphabet;
  std::optional<ClassicalEncoding> encoding;
  std::optional<SealProtocol> seal;

  std::optional<TradeoffPoint> tradeoff_point;
  std::optional<SealPoint> seal_point;
  int point_dim = 2;
  std::set<BoundId> applicable;
  bool assert_bounds = false;
  std::vector<int> quantum_seal_dims;

  std::vector<FrontierFamilyConfig> families;
  std::optional<FrontierMaximizeConfig> maximize;

  std::string mode = "both";  // device scenario: exact | mc | both
  SamplingConfig sampling;
  ToleranceConfig tolerances;
  std::string out_dir = "qseal-out";
};

ScenarioConfig parse_config(const nlohmann::json& doc);
ScenarioConfig load_config_file(const std::string& path);

struct ConfigOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<long long> samples;
  std::optional<int> workers;
  std::optional<std::string> out_dir;
  std::optional<double> tol_exact;
  std::optional<double> tol_mc_sigmas;
};

void apply_overrides(ScenarioConfig& config, const ConfigOverrides& overrides);

// Name registries shared by the config schema and the CLI catalog commands.
const std::vector<std::string>& builtin_device_names();
const std::vector<std::string>& builtin_encoding_names();
const std::vector<std::string>& builtin_seal_names();
const std::vector<std::string>& builtin_family_names();
const std::vector<std::string>& bound_names();

std::optional<BuiltinDevice> device_by_name(const std::string& name);
std::optional<BuiltinEncoding> encoding_by_name(const std::string& name);
std::optional<BuiltinSeal> seal_by_name(const std::string& name);
std::optional<BuiltinFamily> family_by_name(const std::string& name);
std::optional<BoundId> bound_by_name(const std::string& name);

// Inline-definition parsers (states as [re, im] pair lists, instruments as
// Kraus entry lists). Exposed for reuse in tests.
PureState parse_state(const nlohmann::json& j, const std::string& where);
ComplexMatrix parse_matrix(const nlohmann::json& j, const std::string& where);
RepeatingDevice parse_device(const nlohmann::json& j, const std::string& where);
ClassicalEncoding parse_encoding(const nlohmann::json& j, const std::string& where);
Alphabet parse_alphabet(const nlohmann::json& j, const std::string& where);
SealProtocol parse_seal(const nlohmann::json& j, const std::string& where);

}  // namespace qseal
