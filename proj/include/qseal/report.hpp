#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qseal/bounds.hpp"
#include "qseal/bridge.hpp"
#include "qseal/frontier.hpp"

namespace qseal {

// Every reported number carries its computation mode; sampled numbers also
// carry the sample count and standard error.
nlohmann::json tagged_exact(double value);
nlohmann::json tagged_mc(double value, long long samples, double std_error);

nlohmann::json to_json(const TradeoffPoint& point);
nlohmann::json to_json(const SealPoint& point);
nlohmann::json to_json(const BoundCheck& check);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const EquivalenceReport& report);
nlohmann::json to_json(const FrontierSample& sample);

// 17 significant digits, the CSV float format.
std::string format_float(double value);

std::string rule_kind_name(RuleKind kind);

// Rows to CSV with a header, LF line endings.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

}  // namespace qseal
