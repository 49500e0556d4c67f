#include "qseal/config.hpp"

#include <fstream>

namespace qseal {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
}

// Unknown keys are rejected everywhere; typos must not pass silently.
void check_keys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  require_object(j, where);
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
}

const json& require_key(const json& j, const std::string& where, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(where + ": missing key '" + key + "'");
  return *it;
}

double as_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError(where + ": expected a number");
  return j.get<double>();
}

long long as_integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ConfigError(where + ": expected an integer");
  return j.get<long long>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError(where + ": expected a string");
  return j.get<std::string>();
}

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    throw ConfigError(where + ": complex numbers are [re, im] pairs");
  }
  return Complex(as_number(j[0], where + "[0]"), as_number(j[1], where + "[1]"));
}

int parse_decode_target(const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "unidentified") return kUnidentified;
    throw ConfigError(where + ": decode target must be a symbol index or \"unidentified\"");
  }
  return static_cast<int>(as_integer(j, where));
}

MeasurementInstrument parse_instrument(const json& j, const std::string& where) {
  check_keys(j, where, {"dim", "kraus"});
  const int dim = static_cast<int>(as_integer(require_key(j, where, "dim"), where + ".dim"));
  const json& kraus_list = require_key(j, where, "kraus");
  if (!kraus_list.is_array() || kraus_list.empty()) {
    throw ConfigError(where + ".kraus: expected a non-empty array");
  }
  std::vector<std::pair<int, ComplexMatrix>> kraus;
  for (std::size_t i = 0; i < kraus_list.size(); ++i) {
    const std::string entry = where + ".kraus[" + std::to_string(i) + "]";
    check_keys(kraus_list[i], entry, {"label", "matrix"});
    kraus.emplace_back(
        static_cast<int>(as_integer(require_key(kraus_list[i], entry, "label"), entry + ".label")),
        parse_matrix(require_key(kraus_list[i], entry, "matrix"), entry + ".matrix"));
  }
  try {
    return MeasurementInstrument(dim, std::move(kraus));
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

std::map<int, int> parse_decode_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected an array");
  std::map<int, int> decode;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string entry = where + "[" + std::to_string(i) + "]";
    check_keys(j[i], entry, {"label", "symbol"});
    decode[static_cast<int>(as_integer(require_key(j[i], entry, "label"), entry + ".label"))] =
        parse_decode_target(require_key(j[i], entry, "symbol"), entry + ".symbol");
  }
  return decode;
}

SamplingConfig parse_sampling(const json& j, const std::string& where) {
  check_keys(j, where, {"samples", "seed", "workers"});
  SamplingConfig s;
  if (j.contains("samples")) {
    s.samples = as_integer(j["samples"], where + ".samples");
    if (s.samples < 1) throw ConfigError(where + ".samples: must be positive");
  }
  if (j.contains("seed")) {
    const json& seed = j["seed"];
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
      throw ConfigError(where + ".seed: expected an integer");
    }
    s.seed = seed.get<std::uint64_t>();
  }
  if (j.contains("workers")) {
    s.workers = static_cast<int>(as_integer(j["workers"], where + ".workers"));
    if (s.workers < 1) throw ConfigError(where + ".workers: must be positive");
  }
  return s;
}

ToleranceConfig parse_tolerances(const json& j, const std::string& where) {
  check_keys(j, where, {"exact", "mc_sigmas"});
  ToleranceConfig t;
  if (j.contains("exact")) {
    t.exact = as_number(j["exact"], where + ".exact");
    if (t.exact <= 0.0) throw ConfigError(where + ".exact: must be positive");
  }
  if (j.contains("mc_sigmas")) {
    t.mc_sigmas = as_number(j["mc_sigmas"], where + ".mc_sigmas");
    if (t.mc_sigmas <= 0.0) throw ConfigError(where + ".mc_sigmas: must be positive");
  }
  return t;
}

std::set<BoundId> parse_bound_list(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ConfigError(where + ": expected a non-empty array");
  std::set<BoundId> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string name = as_string(j[i], where + "[" + std::to_string(i) + "]");
    const auto id = bound_by_name(name);
    if (!id) throw ConfigError(where + ": unknown bound '" + name + "'");
    out.insert(*id);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& builtin_device_names() {
  static const std::vector<std::string> names{"do_nothing", "measure_reprepare", "breidbart",
                                              "weak_family", "basis_decode"};
  return names;
}

const std::vector<std::string>& builtin_encoding_names() {
  static const std::vector<std::string> names{"bb84", "simplified", "orthogonal"};
  return names;
}

const std::vector<std::string>& builtin_seal_names() {
  static const std::vector<std::string> names{"optimal_qbs", "perfect_seal", "simplified_seal"};
  return names;
}

const std::vector<std::string>& builtin_family_names() {
  static const std::vector<std::string> names{"weak_family", "breidbart_angle"};
  return names;
}

const std::vector<std::string>& bound_names() {
  static const std::vector<std::string> names{
      "f_range",         "g_range",   "tradeoff_general", "tradeoff_d2",    "beta_half",
      "alpha_plus_beta", "g_minus_f", "quantum_seal_d",   "quantum_seal_d2"};
  return names;
}

std::optional<BuiltinDevice> device_by_name(const std::string& name) {
  if (name == "do_nothing") return BuiltinDevice::DoNothing;
  if (name == "measure_reprepare") return BuiltinDevice::MeasureReprepare;
  if (name == "breidbart") return BuiltinDevice::Breidbart;
  if (name == "weak_family") return BuiltinDevice::WeakFamily;
  if (name == "basis_decode") return BuiltinDevice::BasisDecode;
  return std::nullopt;
}

std::optional<BuiltinEncoding> encoding_by_name(const std::string& name) {
  if (name == "bb84") return BuiltinEncoding::Bb84;
  if (name == "simplified") return BuiltinEncoding::Simplified;
  if (name == "orthogonal") return BuiltinEncoding::Orthogonal;
  return std::nullopt;
}

std::optional<BuiltinSeal> seal_by_name(const std::string& name) {
  if (name == "optimal_qbs") return BuiltinSeal::OptimalQbs;
  if (name == "perfect_seal") return BuiltinSeal::PerfectSeal;
  if (name == "simplified_seal") return BuiltinSeal::SimplifiedSeal;
  return std::nullopt;
}

std::optional<BuiltinFamily> family_by_name(const std::string& name) {
  if (name == "weak_family") return BuiltinFamily::Weak;
  if (name == "breidbart_angle") return BuiltinFamily::BreidbartAngle;
  return std::nullopt;
}

std::optional<BoundId> bound_by_name(const std::string& name) {
  for (BoundId id :
       {BoundId::FRange, BoundId::GRange, BoundId::TradeoffGeneral, BoundId::TradeoffD2,
        BoundId::BetaHalf, BoundId::AlphaBetaNineEighths, BoundId::GMinusFEighth,
        BoundId::QuantumSealD, BoundId::QuantumSealD2}) {
    if (bound_name(id) == name) return id;
  }
  return std::nullopt;
}

PureState parse_state(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() < 2) {
    throw ConfigError(where + ": states are arrays of [re, im] pairs, length >= 2");
  }
  std::vector<Complex> amps;
  amps.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    amps.push_back(parse_complex(j[i], where + "[" + std::to_string(i) + "]"));
  }
  try {
    return PureState(std::move(amps));
  } catch (const Error& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

ComplexMatrix parse_matrix(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError(where + ": expected a non-empty array of rows");
  }
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ConfigError(where + ": rows must be non-empty arrays");
  ComplexMatrix m(static_cast<int>(j.size()), static_cast<int>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string row = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) throw ConfigError(row + ": ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      m.at(static_cast<int>(r), static_cast<int>(c)) =
          parse_complex(j[r][c], row + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

RepeatingDevice parse_device(const nlohmann::json& j, const std::string& where) {
  require_object(j, where);
  if (j.contains("builtin")) {
    check_keys(j, where, {"builtin", "dim", "lambda", "guess"});
    const std::string name = as_string(j["builtin"], where + ".builtin");
    const auto which = device_by_name(name);
    if (!which) throw ConfigError(where + ".builtin: unknown device '" + name + "'");
    DeviceParams params;
    if (j.contains("dim")) params.dim = static_cast<int>(as_integer(j["dim"], where + ".dim"));
    if (j.contains("lambda")) params.lambda = as_number(j["lambda"], where + ".lambda");
    if (j.contains("guess")) {
      params.guess = static_cast<int>(as_integer(j["guess"], where + ".guess"));
    }
    return builtin_device(*which, params);
  }

  check_keys(j, where, {"dim", "kraus", "rule"});
  MeasurementInstrument instrument = parse_instrument(
      json{{"dim", require_key(j, where, "dim")}, {"kraus", require_key(j, where, "kraus")}},
      where);
  const json& rule = require_key(j, where, "rule");
  const std::string kind =
      as_string(require_key(rule, where + ".rule", "kind"), where + ".rule.kind");
  try {
    if (kind == "quantum_estimate") {
      check_keys(rule, where + ".rule", {"kind", "estimates"});
      const json& estimates = require_key(rule, where + ".rule", "estimates");
      if (!estimates.is_array()) throw ConfigError(where + ".rule.estimates: expected an array");
      std::map<int, PureState> map;
      for (std::size_t i = 0; i < estimates.size(); ++i) {
        const std::string entry = where + ".rule.estimates[" + std::to_string(i) + "]";
        check_keys(estimates[i], entry, {"label", "state"});
        map.emplace(static_cast<int>(
                        as_integer(require_key(estimates[i], entry, "label"), entry + ".label")),
                    parse_state(require_key(estimates[i], entry, "state"), entry + ".state"));
      }
      return RepeatingDevice(std::move(instrument), EstimationRule::quantum(std::move(map)));
    }
    if (kind == "classical_decode") {
      check_keys(rule, where + ".rule", {"kind", "decode"});
      return RepeatingDevice(
          std::move(instrument),
          EstimationRule::classical(parse_decode_list(
              require_key(rule, where + ".rule", "decode"), where + ".rule.decode")));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(where + ": " + e.what());
  }
  throw ConfigError(where + ".rule.kind: expected 'quantum_estimate' or 'classical_decode'");
}

ClassicalEncoding parse_encoding(const nlohmann::json& j, const std::string& where) {
  require_object(j, where);
  if (j.contains("builtin")) {
    check_keys(j, where, {"builtin"});
    const std::string name = as_string(j["builtin"], where + ".builtin");
    const auto which = encoding_by_name(name);
    if (!which) throw ConfigError(where + ".builtin: unknown encoding '" + name + "'");
    return builtin_encoding(*which);
  }

  check_keys(j, where, {"prior", "table"});
  const json& prior_list = require_key(j, where, "prior");
  const json& table_list = require_key(j, where, "table");
  if (!prior_list.is_array() || !table_list.is_array()) {
    throw ConfigError(where + ": 'prior' and 'table' must be arrays");
  }
  std::vector<double> prior;
  for (std::size_t i = 0; i < prior_list.size(); ++i) {
    prior.push_back(as_number(prior_list[i], where + ".prior[" + std::to_string(i) + "]"));
  }
  std::vector<std::vector<std::pair<PureState, double>>> table;
  for (std::size_t b = 0; b < table_list.size(); ++b) {
    const std::string row = where + ".table[" + std::to_string(b) + "]";
    if (!table_list[b].is_array()) throw ConfigError(row + ": expected an array");
    std::vector<std::pair<PureState, double>> entries;
    for (std::size_t i = 0; i < table_list[b].size(); ++i) {
      const std::string entry = row + "[" + std::to_string(i) + "]";
      check_keys(table_list[b][i], entry, {"state", "probability"});
      entries.emplace_back(
          parse_state(require_key(table_list[b][i], entry, "state"), entry + ".state"),
          as_number(require_key(table_list[b][i], entry, "probability"), entry + ".probability"));
    }
    table.push_back(std::move(entries));
  }
  try {
    return ClassicalEncoding(std::move(table), std::move(prior));
  } catch (const Error& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

Alphabet parse_alphabet(const nlohmann::json& j, const std::string& where) {
  require_object(j, where);
  const std::string kind = as_string(require_key(j, where, "kind"), where + ".kind");
  if (kind == "haar_uniform") {
    check_keys(j, where, {"kind", "dim"});
    try {
      return Alphabet::haar(
          static_cast<int>(as_integer(require_key(j, where, "dim"), where + ".dim")));
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  if (kind == "discrete") {
    check_keys(j, where, {"kind", "members"});
    const json& members = require_key(j, where, "members");
    if (!members.is_array()) throw ConfigError(where + ".members: expected an array");
    std::vector<std::pair<PureState, double>> parsed;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::string entry = where + ".members[" + std::to_string(i) + "]";
      check_keys(members[i], entry, {"state", "probability"});
      parsed.emplace_back(
          parse_state(require_key(members[i], entry, "state"), entry + ".state"),
          as_number(require_key(members[i], entry, "probability"), entry + ".probability"));
    }
    try {
      return Alphabet::discrete(std::move(parsed));
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  throw ConfigError(where + ".kind: expected 'haar_uniform' or 'discrete'");
}

SealProtocol parse_seal(const nlohmann::json& j, const std::string& where) {
  require_object(j, where);
  if (j.contains("builtin")) {
    check_keys(j, where, {"builtin"});
    const std::string name = as_string(j["builtin"], where + ".builtin");
    const auto which = seal_by_name(name);
    if (!which) throw ConfigError(where + ".builtin: unknown seal '" + name + "'");
    return builtin_seal(*which);
  }

  check_keys(j, where, {"dim_alice", "dim_bob", "num_values", "encodings", "decoder", "decode"});
  const int dim_alice =
      static_cast<int>(as_integer(require_key(j, where, "dim_alice"), where + ".dim_alice"));
  const int dim_bob =
      static_cast<int>(as_integer(require_key(j, where, "dim_bob"), where + ".dim_bob"));
  const int num_values =
      static_cast<int>(as_integer(require_key(j, where, "num_values"), where + ".num_values"));
  const json& encodings = require_key(j, where, "encodings");
  if (!encodings.is_array()) throw ConfigError(where + ".encodings: expected an array");
  std::vector<SealEncoding> parsed;
  for (std::size_t i = 0; i < encodings.size(); ++i) {
    const std::string entry = where + ".encodings[" + std::to_string(i) + "]";
    check_keys(encodings[i], entry, {"value", "state", "weight"});
    parsed.push_back(SealEncoding{
        static_cast<int>(as_integer(require_key(encodings[i], entry, "value"), entry + ".value")),
        parse_state(require_key(encodings[i], entry, "state"), entry + ".state"),
        as_number(require_key(encodings[i], entry, "weight"), entry + ".weight")});
  }
  MeasurementInstrument decoder =
      parse_instrument(require_key(j, where, "decoder"), where + ".decoder");
  std::map<int, int> decode;
  const json& decode_list = require_key(j, where, "decode");
  if (!decode_list.is_array()) throw ConfigError(where + ".decode: expected an array");
  for (std::size_t i = 0; i < decode_list.size(); ++i) {
    const std::string entry = where + ".decode[" + std::to_string(i) + "]";
    check_keys(decode_list[i], entry, {"label", "value"});
    decode[static_cast<int>(
        as_integer(require_key(decode_list[i], entry, "label"), entry + ".label"))] =
        parse_decode_target(require_key(decode_list[i], entry, "value"), entry + ".value");
  }
  try {
    return SealProtocol(dim_alice, dim_bob, num_values, std::move(parsed), std::move(decoder),
                        std::move(decode));
  } catch (const Error& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

ScenarioConfig parse_config(const nlohmann::json& doc) {
  static const std::set<std::string> top_keys{
      "scenario", "device",   "alphabet", "encoding", "seal",       "point",
      "bounds",   "frontier", "mode",     "sampling", "tolerances", "output"};
  check_keys(doc, "config", top_keys);

  ScenarioConfig config;
  config.echo = doc;

  const std::string scenario =
      as_string(require_key(doc, "config", "scenario"), "config.scenario");
  if (scenario == "device") config.kind = ScenarioKind::Device;
  else if (scenario == "seal") config.kind = ScenarioKind::Seal;
  else if (scenario == "bridge") config.kind = ScenarioKind::Bridge;
  else if (scenario == "bounds") config.kind = ScenarioKind::Bounds;
  else if (scenario == "frontier") config.kind = ScenarioKind::Frontier;
  else if (scenario == "verify-all") config.kind = ScenarioKind::VerifyAll;
  else if (scenario == "paper-table") config.kind = ScenarioKind::PaperTable;
  else throw ConfigError("config.scenario: unknown scenario '" + scenario + "'");

  if (doc.contains("sampling")) {
    config.sampling = parse_sampling(doc["sampling"], "config.sampling");
  }
  if (doc.contains("tolerances")) {
    config.tolerances = parse_tolerances(doc["tolerances"], "config.tolerances");
  }
  if (doc.contains("output")) {
    check_keys(doc["output"], "config.output", {"directory"});
    if (doc["output"].contains("directory")) {
      config.out_dir = as_string(doc["output"]["directory"], "config.output.directory");
    }
  }
  if (doc.contains("mode")) {
    config.mode = as_string(doc["mode"], "config.mode");
    if (config.mode != "exact" && config.mode != "mc" && config.mode != "both") {
      throw ConfigError("config.mode: expected 'exact', 'mc' or 'both'");
    }
  }

  if (doc.contains("device")) config.device = parse_device(doc["device"], "config.device");
  if (doc.contains("alphabet")) {
    config.alphabet = parse_alphabet(doc["alphabet"], "config.alphabet");
  }
  if (doc.contains("encoding")) {
    config.encoding = parse_encoding(doc["encoding"], "config.encoding");
  }
  if (doc.contains("seal")) config.seal = parse_seal(doc["seal"], "config.seal");

  if (doc.contains("bounds")) {
    const json& bounds = doc["bounds"];
    check_keys(bounds, "config.bounds", {"apply", "assert"});
    config.applicable =
        parse_bound_list(require_key(bounds, "config.bounds", "apply"), "config.bounds.apply");
    if (bounds.contains("assert")) {
      if (!bounds["assert"].is_boolean()) {
        throw ConfigError("config.bounds.assert: expected a boolean");
      }
      config.assert_bounds = bounds["assert"].get<bool>();
    }
  }

  if (doc.contains("point")) {
    const json& point = doc["point"];
    if (point.contains("alpha") || point.contains("beta")) {
      check_keys(point, "config.point", {"alpha", "beta", "d"});
      SealPoint p;
      p.alpha = as_number(require_key(point, "config.point", "alpha"), "config.point.alpha");
      p.beta = as_number(require_key(point, "config.point", "beta"), "config.point.beta");
      config.seal_point = p;
    } else {
      check_keys(point, "config.point", {"f", "g", "d", "rule"});
      TradeoffPoint p;
      p.f = as_number(require_key(point, "config.point", "f"), "config.point.f");
      p.g = as_number(require_key(point, "config.point", "g"), "config.point.g");
      if (point.contains("rule")) {
        const std::string rule = as_string(point["rule"], "config.point.rule");
        if (rule == "quantum_estimate") p.kind = RuleKind::QuantumEstimate;
        else if (rule == "classical_decode") p.kind = RuleKind::ClassicalDecode;
        else throw ConfigError("config.point.rule: unknown rule kind '" + rule + "'");
      }
      config.tradeoff_point = p;
    }
    if (point.contains("d")) {
      config.point_dim = static_cast<int>(as_integer(point["d"], "config.point.d"));
      if (config.tradeoff_point) config.tradeoff_point->dim = config.point_dim;
    }
  }

  if (doc.contains("frontier")) {
    const json& frontier = doc["frontier"];
    check_keys(frontier, "config.frontier", {"families", "maximize", "quantum_seal_dims"});
    if (frontier.contains("families")) {
      const json& families = frontier["families"];
      if (!families.is_array()) throw ConfigError("config.frontier.families: expected an array");
      for (std::size_t i = 0; i < families.size(); ++i) {
        const std::string entry = "config.frontier.families[" + std::to_string(i) + "]";
        check_keys(families[i], entry, {"name", "grid"});
        FrontierFamilyConfig fam;
        fam.name = as_string(require_key(families[i], entry, "name"), entry + ".name");
        if (!family_by_name(fam.name)) {
          throw ConfigError(entry + ".name: unknown family '" + fam.name + "'");
        }
        const json& grid = require_key(families[i], entry, "grid");
        if (!grid.is_array() || grid.empty()) {
          throw ConfigError(entry + ".grid: expected a non-empty array");
        }
        for (std::size_t g = 0; g < grid.size(); ++g) {
          fam.grid.push_back(
              static_cast<int>(as_integer(grid[g], entry + ".grid[" + std::to_string(g) + "]")));
        }
        config.families.push_back(std::move(fam));
      }
    }
    if (frontier.contains("maximize")) {
      const json& maximize = frontier["maximize"];
      check_keys(maximize, "config.frontier.maximize", {"family", "f_min"});
      FrontierMaximizeConfig m;
      m.family = as_string(require_key(maximize, "config.frontier.maximize", "family"),
                           "config.frontier.maximize.family");
      if (!family_by_name(m.family)) {
        throw ConfigError("config.frontier.maximize.family: unknown family '" + m.family + "'");
      }
      const json& f_min = require_key(maximize, "config.frontier.maximize", "f_min");
      if (!f_min.is_array() || f_min.empty()) {
        throw ConfigError("config.frontier.maximize.f_min: expected a non-empty array");
      }
      for (std::size_t i = 0; i < f_min.size(); ++i) {
        m.f_min.push_back(
            as_number(f_min[i], "config.frontier.maximize.f_min[" + std::to_string(i) + "]"));
      }
      config.maximize = std::move(m);
    }
    if (frontier.contains("quantum_seal_dims")) {
      const json& dims = frontier["quantum_seal_dims"];
      if (!dims.is_array()) {
        throw ConfigError("config.frontier.quantum_seal_dims: expected an array");
      }
      for (std::size_t i = 0; i < dims.size(); ++i) {
        config.quantum_seal_dims.push_back(static_cast<int>(
            as_integer(dims[i], "config.frontier.quantum_seal_dims[" + std::to_string(i) + "]")));
      }
    }
  }

  // Cross-field requirements per scenario.
  switch (config.kind) {
    case ScenarioKind::Device:
      if (!config.device) throw ConfigError("config: device scenario requires 'device'");
      if (config.device->rule.kind == RuleKind::ClassicalDecode && !config.encoding) {
        throw ConfigError("config: classical device scenario requires 'encoding'");
      }
      break;
    case ScenarioKind::Seal:
      if (!config.seal) throw ConfigError("config: seal scenario requires 'seal'");
      break;
    case ScenarioKind::Bridge:
      if (!(config.device && config.encoding) && !config.seal) {
        throw ConfigError("config: bridge scenario requires 'device'+'encoding' or 'seal'");
      }
      break;
    case ScenarioKind::Bounds:
      if (!config.tradeoff_point && !config.seal_point && config.quantum_seal_dims.empty()) {
        throw ConfigError("config: bounds scenario requires 'point' or quantum_seal_dims");
      }
      if ((config.tradeoff_point || config.seal_point) && config.applicable.empty()) {
        throw ConfigError("config: bounds scenario requires 'bounds.apply'");
      }
      break;
    case ScenarioKind::Frontier:
      if (config.families.empty() && !config.maximize) {
        throw ConfigError("config: frontier scenario requires families or a maximize block");
      }
      break;
    case ScenarioKind::VerifyAll:
    case ScenarioKind::PaperTable:
      break;
  }
  return config;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return parse_config(doc);
}

void apply_overrides(ScenarioConfig& config, const ConfigOverrides& overrides) {
  if (overrides.seed) config.sampling.seed = *overrides.seed;
  if (overrides.samples) {
    if (*overrides.samples < 1) throw ConfigError("--samples must be positive");
    config.sampling.samples = *overrides.samples;
  }
  if (overrides.workers) {
    if (*overrides.workers < 1) throw ConfigError("--workers must be positive");
    config.sampling.workers = *overrides.workers;
  }
  if (overrides.out_dir) config.out_dir = *overrides.out_dir;
  if (overrides.tol_exact) {
    if (*overrides.tol_exact <= 0.0) throw ConfigError("--tol-exact must be positive");
    config.tolerances.exact = *overrides.tol_exact;
  }
  if (overrides.tol_mc_sigmas) {
    if (*overrides.tol_mc_sigmas <= 0.0) throw ConfigError("--tol-mc must be positive");
    config.tolerances.mc_sigmas = *overrides.tol_mc_sigmas;
  }
}

}  // namespace qseal
