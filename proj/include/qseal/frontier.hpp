#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qseal/bounds.hpp"
#include "qseal/device.hpp"

namespace qseal {

struct ParamSpec {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
};

// A parameterized device family; classical-decode families carry the fixed
// encoding they are evaluated against.
struct DeviceFamily {
  std::string name;
  std::vector<ParamSpec> params;
  std::function<RepeatingDevice(const std::vector<double>&)> builder;
  RuleKind kind = RuleKind::QuantumEstimate;
  std::optional<ClassicalEncoding> encoding;
  int dim = 2;
};

// Exact fidelities for one parameter point (Haar averages for quantum
// estimation, weighted encoding sums for classical decoding).
TradeoffPoint evaluate_family_point(const DeviceFamily& family, const std::vector<double>& theta);

struct FrontierSample {
  std::vector<double> theta;
  TradeoffPoint point;
};

struct FrontierResult {
  std::string family;
  RuleKind kind = RuleKind::QuantumEstimate;
  int dim = 2;
  std::vector<int> grid;
  std::vector<FrontierSample> samples;
  std::vector<FrontierSample> envelope;  // non-dominated, F ascending
};

// Exact fidelities on the full parameter grid plus the Pareto envelope
// (max G per F bucket of width 1e-3, then dominance-filtered).
FrontierResult sweep(const DeviceFamily& family, const std::vector<int>& grid);

struct OptimizerConfig {
  int seed_points_per_param = 33;
  double initial_step_fraction = 0.1;
  double min_step_fraction = 1e-7;
  double penalty = 1e3;
};

// Best-found parameters maximizing G subject to F >= f_min. Deterministic:
// coarse grid seeding, then compass descent with halving steps. Never
// returns a point worse than the best grid seed.
std::pair<std::vector<double>, TradeoffPoint> maximize_g_at_f(const DeviceFamily& family,
                                                              double f_min,
                                                              const OptimizerConfig& opt = {});

struct RegionRow {
  std::string family;
  RuleKind kind = RuleKind::QuantumEstimate;
  FrontierSample sample;
  BoundReport bounds;
};

// Merged envelope across families with a per-point bound report; classical
// families are checked against the quantum tradeoff to flag the crossover.
std::vector<RegionRow> region_report(const std::vector<FrontierResult>& results);

enum class BuiltinFamily { Weak, BreidbartAngle };

DeviceFamily builtin_family(BuiltinFamily which);

}  // namespace qseal
