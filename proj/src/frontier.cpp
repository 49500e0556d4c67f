#include "qseal/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qseal {

namespace {

constexpr double kBucketWidth = 1e-3;
constexpr double kFeasibilitySlack = 1e-9;

std::string format_theta(const std::vector<double>& theta) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (i) os << ", ";
    os << theta[i];
  }
  os << "]";
  return os.str();
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Envelope preference inside one F bucket.
bool bucket_better(const FrontierSample& a, const FrontierSample& b) {
  if (a.point.g != b.point.g) return a.point.g > b.point.g;
  if (a.point.f != b.point.f) return a.point.f < b.point.f;
  return lex_less(a.theta, b.theta);
}

bool dominates(const FrontierSample& a, const FrontierSample& b) {
  return (a.point.f > b.point.f && a.point.g >= b.point.g) ||
         (a.point.f >= b.point.f && a.point.g > b.point.g);
}

std::vector<FrontierSample> extract_envelope(const std::vector<FrontierSample>& samples) {
  std::vector<FrontierSample> winners;
  for (const FrontierSample& s : samples) {
    const long long bucket = static_cast<long long>(std::floor(s.point.f / kBucketWidth));
    auto it = std::find_if(winners.begin(), winners.end(), [bucket](const FrontierSample& w) {
      return static_cast<long long>(std::floor(w.point.f / kBucketWidth)) == bucket;
    });
    if (it == winners.end()) {
      winners.push_back(s);
    } else if (bucket_better(s, *it)) {
      *it = s;
    }
  }
  std::vector<FrontierSample> envelope;
  for (const FrontierSample& w : winners) {
    const bool dominated = std::any_of(winners.begin(), winners.end(), [&w](const FrontierSample& other) {
      return dominates(other, w);
    });
    if (!dominated) envelope.push_back(w);
  }
  std::sort(envelope.begin(), envelope.end(), [](const FrontierSample& a, const FrontierSample& b) {
    if (a.point.f != b.point.f) return a.point.f < b.point.f;
    return lex_less(a.theta, b.theta);
  });
  return envelope;
}

struct Candidate {
  std::vector<double> theta;
  TradeoffPoint point;
};

// Feasible beats infeasible; among feasible higher G wins; among infeasible
// the penalized objective steers toward the constraint.
bool better_candidate(const Candidate& a, const Candidate& b, double f_min, double penalty) {
  const bool feas_a = a.point.f >= f_min;
  const bool feas_b = b.point.f >= f_min;
  if (feas_a != feas_b) return feas_a;
  if (feas_a) return a.point.g > b.point.g;
  const double ja = a.point.g - penalty * (f_min - a.point.f);
  const double jb = b.point.g - penalty * (f_min - b.point.f);
  return ja > jb;
}

}  // namespace

TradeoffPoint evaluate_family_point(const DeviceFamily& family, const std::vector<double>& theta) {
  if (theta.size() != family.params.size()) {
    throw ConfigError("evaluate_family_point: expected " + std::to_string(family.params.size()) +
                      " parameters, got " + std::to_string(theta.size()));
  }
  RepeatingDevice dev = [&] {
    try {
      return family.builder(theta);
    } catch (const Error& e) {
      throw ConfigError("family '" + family.name + "' failed at theta=" + format_theta(theta) +
                        ": " + e.what());
    }
  }();
  if (family.kind == RuleKind::QuantumEstimate) {
    return average_fidelities_exact(dev);
  }
  if (!family.encoding.has_value()) {
    throw ConfigError("family '" + family.name + "': classical family without an encoding");
  }
  return classical_estimation_fidelity(dev, *family.encoding);
}

FrontierResult sweep(const DeviceFamily& family, const std::vector<int>& grid) {
  if (grid.size() != family.params.size()) {
    throw ConfigError("sweep: grid spec must match the parameter count");
  }
  for (int g : grid) {
    if (g < 2) throw ConfigError("sweep: need at least 2 grid points per parameter");
  }

  FrontierResult result;
  result.family = family.name;
  result.kind = family.kind;
  result.dim = family.dim;
  result.grid = grid;

  const std::size_t n_params = family.params.size();
  std::vector<int> index(n_params, 0);
  while (true) {
    std::vector<double> theta(n_params);
    for (std::size_t i = 0; i < n_params; ++i) {
      const ParamSpec& p = family.params[i];
      theta[i] = p.lo + (p.hi - p.lo) * index[i] / (grid[i] - 1.0);
    }
    result.samples.push_back(FrontierSample{theta, evaluate_family_point(family, theta)});

    std::size_t axis = n_params;
    while (axis > 0) {
      --axis;
      if (++index[axis] < grid[axis]) break;
      index[axis] = 0;
      if (axis == 0) {
        result.envelope = extract_envelope(result.samples);
        return result;
      }
    }
  }
}

std::pair<std::vector<double>, TradeoffPoint> maximize_g_at_f(const DeviceFamily& family,
                                                              double f_min,
                                                              const OptimizerConfig& opt) {
  if (family.params.empty()) throw ConfigError("maximize_g_at_f: family has no parameters");
  if (f_min > 1.0 + kFeasibilitySlack) {
    throw InfeasibleError("maximize_g_at_f: f_min " + std::to_string(f_min) + " exceeds 1");
  }

  const std::size_t n_params = family.params.size();
  // Keep the seeding grid bounded for multi-parameter families.
  int per_param = opt.seed_points_per_param;
  while (per_param > 3 && std::pow(per_param, static_cast<double>(n_params)) > 2e5) {
    --per_param;
  }

  Candidate best;
  bool have_best = false;
  std::vector<int> index(n_params, 0);
  while (true) {
    std::vector<double> theta(n_params);
    for (std::size_t i = 0; i < n_params; ++i) {
      const ParamSpec& p = family.params[i];
      theta[i] = p.lo + (p.hi - p.lo) * index[i] / (per_param - 1.0);
    }
    Candidate cand{theta, evaluate_family_point(family, theta)};
    if (!have_best || better_candidate(cand, best, f_min, opt.penalty)) {
      best = std::move(cand);
      have_best = true;
    }
    std::size_t axis = n_params;
    bool done = true;
    while (axis > 0) {
      --axis;
      if (++index[axis] < per_param) {
        done = false;
        break;
      }
      index[axis] = 0;
    }
    if (done) break;
  }

  // Compass descent with halving steps around the best seed.
  double step_fraction = opt.initial_step_fraction;
  while (step_fraction >= opt.min_step_fraction) {
    bool improved = false;
    for (std::size_t i = 0; i < n_params; ++i) {
      const ParamSpec& p = family.params[i];
      const double step = step_fraction * (p.hi - p.lo);
      for (double direction : {1.0, -1.0}) {
        std::vector<double> theta = best.theta;
        theta[i] = std::clamp(theta[i] + direction * step, p.lo, p.hi);
        if (theta[i] == best.theta[i]) continue;
        Candidate cand{theta, evaluate_family_point(family, theta)};
        if (better_candidate(cand, best, f_min, opt.penalty)) {
          best = std::move(cand);
          improved = true;
        }
      }
    }
    if (!improved) step_fraction *= 0.5;
  }

  if (best.point.f < f_min - kFeasibilitySlack) {
    throw InfeasibleError("maximize_g_at_f: no point of family '" + family.name +
                          "' reaches F >= " + std::to_string(f_min) + " (best F " +
                          std::to_string(best.point.f) + ")");
  }
  return {best.theta, best.point};
}

std::vector<RegionRow> region_report(const std::vector<FrontierResult>& results) {
  if (results.empty()) throw ConfigError("region_report: no frontier results");
  const int d = results.front().dim;
  for (const FrontierResult& r : results) {
    if (r.dim != d) throw DimensionError("region_report: mixed dimensions");
  }

  struct Tagged {
    const FrontierResult* owner;
    FrontierSample sample;
  };
  std::vector<Tagged> merged;
  for (const FrontierResult& r : results) {
    for (const FrontierSample& s : r.envelope) merged.push_back(Tagged{&r, s});
  }

  std::vector<RegionRow> rows;
  for (const Tagged& t : merged) {
    const bool dominated = std::any_of(merged.begin(), merged.end(), [&t](const Tagged& other) {
      return dominates(other.sample, t.sample);
    });
    if (dominated) continue;
    std::set<BoundId> applicable;
    if (t.owner->kind == RuleKind::QuantumEstimate) {
      applicable = {BoundId::FRange, BoundId::GRange, BoundId::TradeoffGeneral};
    } else {
      applicable = {BoundId::GMinusFEighth};
    }
    if (d == 2) applicable.insert(BoundId::TradeoffD2);
    RegionRow row;
    row.family = t.owner->family;
    row.kind = t.owner->kind;
    row.sample = t.sample;
    row.bounds = evaluate(t.sample.point, d, applicable);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const RegionRow& a, const RegionRow& b) {
    if (a.sample.point.f != b.sample.point.f) return a.sample.point.f < b.sample.point.f;
    if (a.family != b.family) return a.family < b.family;
    return lex_less(a.sample.theta, b.sample.theta);
  });
  return rows;
}

DeviceFamily builtin_family(BuiltinFamily which) {
  switch (which) {
    case BuiltinFamily::Weak: {
      DeviceFamily family;
      family.name = "weak_family";
      family.params = {{"lambda", 0.0, 0.5}};
      family.kind = RuleKind::QuantumEstimate;
      family.dim = 2;
      family.builder = [](const std::vector<double>& theta) {
        return builtin_device(BuiltinDevice::WeakFamily, {.lambda = theta[0]});
      };
      return family;
    }
    case BuiltinFamily::BreidbartAngle: {
      DeviceFamily family;
      family.name = "breidbart_angle";
      family.params = {{"angle", 0.0, M_PI / 4.0}};
      family.kind = RuleKind::ClassicalDecode;
      family.dim = 2;
      family.encoding = builtin_encoding(BuiltinEncoding::Bb84);
      family.builder = [](const std::vector<double>& theta) {
        const double t = theta[0];
        const PureState b0({Complex(std::cos(t), 0.0), Complex(std::sin(t), 0.0)});
        const PureState b1({Complex(-std::sin(t), 0.0), Complex(std::cos(t), 0.0)});
        return RepeatingDevice(MeasurementInstrument::projective({{0, b0}, {1, b1}}),
                               EstimationRule::classical({{0, 0}, {1, 1}}));
      };
      return family;
    }
  }
  throw ConfigError("builtin_family: unknown family");
}

}  // namespace qseal
