#include "doctest.h"

#include <cmath>

#include "qseal/frontier.hpp"

using namespace qseal;

namespace {

// Closed-form inverse of the weak family: best G given a transmission floor.
double weak_best_g(double f) {
  const double half_span = (3.0 * f - 2.0) / 2.0;
  return 0.5 + std::sqrt(std::max(0.0, 0.25 - half_span * half_span)) / 3.0;
}

}  // namespace

TEST_CASE("weak-family sweep stays on the tradeoff ellipse") {
  const FrontierResult result = sweep(builtin_family(BuiltinFamily::Weak), {101});
  REQUIRE(result.samples.size() == 101);
  for (const FrontierSample& s : result.samples) {
    const double lhs = (s.point.f - 2.0 / 3.0) * (s.point.f - 2.0 / 3.0) +
                       4.0 * (s.point.g - 0.5) * (s.point.g - 0.5);
    CHECK(std::abs(lhs - 1.0 / 9.0) < 1e-10);
  }
  // Endpoints.
  CHECK(std::abs(result.samples.front().point.f - 1.0) < 1e-12);
  CHECK(std::abs(result.samples.front().point.g - 0.5) < 1e-12);
  CHECK(std::abs(result.samples.back().point.f - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(result.samples.back().point.g - 2.0 / 3.0) < 1e-12);
}

TEST_CASE("breidbart-angle sweep peaks at pi/8") {
  const DeviceFamily family = builtin_family(BuiltinFamily::BreidbartAngle);
  const FrontierResult result = sweep(family, {101});
  double best_g = -1.0;
  double best_angle = 0.0;
  for (const FrontierSample& s : result.samples) {
    if (s.point.g > best_g) {
      best_g = s.point.g;
      best_angle = s.theta[0];
    }
  }
  const double spacing = (M_PI / 4.0) / 100.0;
  CHECK(std::abs(best_angle - M_PI / 8.0) <= spacing + 1e-12);
  CHECK(std::abs(best_g - std::cos(M_PI / 8.0) * std::cos(M_PI / 8.0)) < 1e-4);
}

TEST_CASE("envelopes contain no dominated point") {
  const FrontierResult weak = sweep(builtin_family(BuiltinFamily::Weak), {101});
  for (const FrontierSample& e : weak.envelope) {
    for (const FrontierSample& s : weak.samples) {
      const bool dominates = (s.point.f > e.point.f && s.point.g >= e.point.g) ||
                             (s.point.f >= e.point.f && s.point.g > e.point.g);
      CHECK(!dominates);
    }
  }
  CHECK_THROWS_AS(sweep(builtin_family(BuiltinFamily::Weak), {1}), ConfigError);
  CHECK_THROWS_AS(sweep(builtin_family(BuiltinFamily::Weak), {3, 3}), ConfigError);
}

TEST_CASE("maximize_g_at_f recovers the weak-family closed form") {
  const DeviceFamily family = builtin_family(BuiltinFamily::Weak);

  // Oracle: closed form at lambda = 0.3.
  auto [theta, point] = maximize_g_at_f(family, 14.0 / 15.0);
  CHECK(std::abs(point.g - 0.6) < 1e-6);
  CHECK(point.f >= 14.0 / 15.0 - 1e-9);

  auto [theta_one, point_one] = maximize_g_at_f(family, 1.0);
  CHECK(std::abs(point_one.g - 0.5) < 1e-6);

  auto [theta_low, point_low] = maximize_g_at_f(family, 2.0 / 3.0);
  CHECK(std::abs(point_low.g - 2.0 / 3.0) < 1e-6);

  CHECK_THROWS_AS(maximize_g_at_f(family, 1.5), InfeasibleError);
}

TEST_CASE("maximize_g_at_f tracks the closed-form inverse across the range") {
  const DeviceFamily family = builtin_family(BuiltinFamily::Weak);
  for (int i = 0; i <= 9; ++i) {
    const double f = 2.0 / 3.0 + (1.0 - 2.0 / 3.0) * i / 9.0;
    auto [theta, point] = maximize_g_at_f(family, f);
    CHECK(std::abs(point.g - weak_best_g(f)) < 1e-5);
  }
}

TEST_CASE("optimizer never falls below the best grid seed") {
  const DeviceFamily family = builtin_family(BuiltinFamily::Weak);
  OptimizerConfig opt;
  opt.seed_points_per_param = 5;
  const double f_min = 0.8;
  // Best feasible seed by hand over {0, .125, .25, .375, .5}.
  double best_seed_g = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double lambda = 0.5 * i / 4.0;
    const TradeoffPoint p = evaluate_family_point(family, {lambda});
    if (p.f >= f_min && p.g > best_seed_g) best_seed_g = p.g;
  }
  auto [theta, point] = maximize_g_at_f(family, f_min, opt);
  CHECK(point.g >= best_seed_g);
}

TEST_CASE("region report flags classical points beyond the quantum ellipse") {
  const FrontierResult weak = sweep(builtin_family(BuiltinFamily::Weak), {41});
  const FrontierResult breidbart = sweep(builtin_family(BuiltinFamily::BreidbartAngle), {41});
  const std::vector<RegionRow> rows = region_report({weak, breidbart});
  REQUIRE(!rows.empty());

  bool classical_violation = false;
  for (const RegionRow& row : rows) {
    for (const BoundCheck& c : row.bounds.checks) {
      if (c.id != BoundId::TradeoffD2) continue;
      if (row.kind == RuleKind::ClassicalDecode && !c.satisfied) classical_violation = true;
      if (row.kind == RuleKind::QuantumEstimate) CHECK(c.satisfied);
    }
  }
  CHECK(classical_violation);

  // Idempotence: a single family's merged envelope equals its own.
  const std::vector<RegionRow> alone = region_report({weak});
  CHECK(alone.size() == weak.envelope.size());
  const std::vector<RegionRow> duplicated = region_report({weak, weak});
  CHECK(duplicated.size() == 2 * alone.size());  // same points, both attributions

  FrontierResult other = weak;
  other.dim = 3;
  CHECK_THROWS_AS(region_report({weak, other}), DimensionError);
}
