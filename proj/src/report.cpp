#include "qseal/report.hpp"

#include <cstdio>

namespace qseal {

using nlohmann::json;

json tagged_exact(double value) {
  return json{{"value", value}, {"mode", "exact"}};
}

json tagged_mc(double value, long long samples, double std_error) {
  return json{{"value", value}, {"mode", "mc"}, {"samples", samples}, {"std_error", std_error}};
}

std::string rule_kind_name(RuleKind kind) {
  return kind == RuleKind::QuantumEstimate ? "quantum_estimate" : "classical_decode";
}

json to_json(const TradeoffPoint& point) {
  json out;
  out["d"] = point.dim;
  out["rule"] = rule_kind_name(point.kind);
  if (point.mc.has_value()) {
    out["f"] = tagged_mc(point.f, point.mc->samples, point.mc->se_f);
    out["g"] = tagged_mc(point.g, point.mc->samples, point.mc->se_g);
    out["workers"] = point.mc->workers;
  } else {
    out["f"] = tagged_exact(point.f);
    out["g"] = tagged_exact(point.g);
  }
  return out;
}

json to_json(const SealPoint& point) {
  return json{{"alpha", tagged_exact(point.alpha)}, {"beta", tagged_exact(point.beta)}};
}

json to_json(const BoundCheck& check) {
  return json{{"bound", bound_name(check.id)},
              {"lhs", check.lhs},
              {"rhs", check.rhs},
              {"margin", check.margin},
              {"satisfied", check.satisfied}};
}

json to_json(const BoundReport& report) {
  json checks = json::array();
  for (const BoundCheck& c : report.checks) checks.push_back(to_json(c));
  return json{{"mode", "exact"}, {"checks", checks}, {"all_satisfied", report.all_satisfied()}};
}

json to_json(const EquivalenceReport& report) {
  return json{{"mode", "exact"},
              {"device", to_json(report.device_point)},
              {"seal", to_json(report.seal_point)},
              {"f_vs_one_minus_beta", report.f_vs_one_minus_beta},
              {"g_vs_alpha", report.g_vs_alpha},
              {"tolerance", report.tolerance},
              {"pass", report.pass}};
}

json to_json(const FrontierSample& sample) {
  return json{{"theta", sample.theta}, {"point", to_json(sample.point)}};
}

std::string format_float(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

}  // namespace qseal
