#include "doctest.h"

#include <cmath>

#include "qseal/bounds.hpp"

using namespace qseal;

namespace {

TradeoffPoint tradeoff(double f, double g, int d = 2,
                       RuleKind kind = RuleKind::QuantumEstimate) {
  TradeoffPoint p;
  p.f = f;
  p.g = g;
  p.dim = d;
  p.kind = kind;
  return p;
}

const BoundCheck& find_check(const BoundReport& report, BoundId id) {
  for (const BoundCheck& c : report.checks) {
    if (c.id == id) return c;
  }
  FAIL("bound not present in report");
  return report.checks.front();
}

}  // namespace

TEST_CASE("qubit tradeoff form on the optimal-information point") {
  const BoundReport report = evaluate(tradeoff(2.0 / 3.0, 2.0 / 3.0), 2, {BoundId::TradeoffD2});
  const BoundCheck& c = find_check(report, BoundId::TradeoffD2);
  CHECK(std::abs(c.lhs - 1.0 / 9.0) < 1e-15);
  CHECK(c.satisfied);
  CHECK(std::abs(c.margin) < 1e-15);
}

TEST_CASE("the breidbart point violates the quantum ellipse but not the classical cap") {
  const double g = std::cos(M_PI / 8.0) * std::cos(M_PI / 8.0);
  const BoundReport report = evaluate(tradeoff(0.75, g, 2, RuleKind::ClassicalDecode), 2,
                                      {BoundId::TradeoffD2, BoundId::GMinusFEighth});

  const BoundCheck& ellipse = find_check(report, BoundId::TradeoffD2);
  CHECK(std::abs(ellipse.lhs - (1.0 / 144.0 + 0.5)) < 1e-12);
  CHECK(!ellipse.satisfied);

  const BoundCheck& cap = find_check(report, BoundId::GMinusFEighth);
  CHECK(std::abs(cap.lhs - 0.1035533905932737) < 1e-12);
  CHECK(cap.satisfied);
}

TEST_CASE("seal bounds on the optimal qbs point") {
  SealPoint p;
  p.alpha = 0.75;
  p.beta = 0.375;
  const BoundReport report =
      evaluate(p, 2, {BoundId::BetaHalf, BoundId::AlphaBetaNineEighths});
  CHECK(report.all_satisfied());
  const BoundCheck& sum = find_check(report, BoundId::AlphaBetaNineEighths);
  CHECK(std::abs(sum.margin) < 1e-15);
}

TEST_CASE("caller-declared applicability is enforced") {
  CHECK_THROWS_AS(evaluate(tradeoff(0.9, 0.5, 3), 3, {BoundId::TradeoffD2}), ScopeError);
  CHECK_THROWS_AS(evaluate(tradeoff(0.9, 0.5), 2, {BoundId::BetaHalf}), ScopeError);
  SealPoint p;
  CHECK_THROWS_AS(evaluate(p, 2, {BoundId::FRange}), ScopeError);
  CHECK_THROWS_AS(evaluate(p, 3, {BoundId::QuantumSealD2}), ScopeError);
  CHECK_THROWS_AS(evaluate(tradeoff(0.9, 0.5), 1, {BoundId::FRange}), DimensionError);
}

TEST_CASE("estimation fidelity above 2/3 witnesses the ellipse violation") {
  CHECK(violation_witness_g(tradeoff(0.75, std::cos(M_PI / 8.0) * std::cos(M_PI / 8.0))));
  CHECK(!violation_witness_g(tradeoff(0.75, 2.0 / 3.0)));  // boundary is strict
  CHECK(!violation_witness_g(tradeoff(1.0, 0.5)));
}

TEST_CASE("built-in quantum devices satisfy every quantum bound") {
  std::vector<RepeatingDevice> devices;
  for (int d = 2; d <= 4; ++d) {
    devices.push_back(builtin_device(BuiltinDevice::DoNothing, {.dim = d}));
    devices.push_back(builtin_device(BuiltinDevice::MeasureReprepare, {.dim = d}));
  }
  for (double lambda : {0.0, 0.15, 0.3, 0.45, 0.5}) {
    devices.push_back(builtin_device(BuiltinDevice::WeakFamily, {.lambda = lambda}));
  }
  for (const RepeatingDevice& dev : devices) {
    const TradeoffPoint p = average_fidelities_exact(dev);
    std::set<BoundId> applicable{BoundId::FRange, BoundId::GRange, BoundId::TradeoffGeneral};
    if (p.dim == 2) applicable.insert(BoundId::TradeoffD2);
    const BoundReport report = evaluate(p, p.dim, applicable);
    for (const BoundCheck& c : report.checks) {
      CHECK(c.satisfied);
      CHECK(c.margin >= -1e-9);
    }
  }
}

TEST_CASE("classical catalog points sit at or under the classical cap") {
  const TradeoffPoint breidbart = classical_estimation_fidelity(
      builtin_device(BuiltinDevice::Breidbart), builtin_encoding(BuiltinEncoding::Bb84));
  const BoundReport b = evaluate(breidbart, 2, {BoundId::TradeoffD2, BoundId::GMinusFEighth});
  CHECK(!find_check(b, BoundId::TradeoffD2).satisfied);
  CHECK(find_check(b, BoundId::TradeoffD2).lhs >= 0.5);
  CHECK(find_check(b, BoundId::GMinusFEighth).satisfied);

  const TradeoffPoint simplified = classical_estimation_fidelity(
      builtin_device(BuiltinDevice::BasisDecode), builtin_encoding(BuiltinEncoding::Simplified));
  const BoundCheck& cap = find_check(evaluate(simplified, 2, {BoundId::GMinusFEighth}),
                                     BoundId::GMinusFEighth);
  CHECK(cap.satisfied);
  CHECK(std::abs(cap.margin) < 1e-12);  // saturation
}

TEST_CASE("general and qubit tradeoff forms agree at d=2") {
  RngStream rng(4321, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const TradeoffPoint p = tradeoff(rng.uniform(), rng.uniform());
    const BoundReport report = evaluate(p, 2, {BoundId::TradeoffGeneral, BoundId::TradeoffD2});
    const BoundCheck& general = find_check(report, BoundId::TradeoffGeneral);
    const BoundCheck& qubit = find_check(report, BoundId::TradeoffD2);
    CHECK(std::abs(general.lhs - qubit.lhs) < 1e-14);
    CHECK(std::abs(general.rhs - qubit.rhs) < 1e-15);
    CHECK(general.satisfied == qubit.satisfied);
  }
}

TEST_CASE("quantum-data sealing scenario saturates its cap") {
  for (int d = 2; d <= 8; ++d) {
    const BoundReport report = quantum_seal_bound_scenario(d);
    const BoundCheck& cap = find_check(report, BoundId::QuantumSealD);
    CHECK(std::abs(cap.lhs - (d - 1.0) / (d + 1.0)) < 1e-12);
    CHECK(std::abs(cap.margin) < 1e-12);
    CHECK(cap.satisfied);
  }
  // Oracle: the exact Haar average gives 1 - 2/(d+1).
  CHECK(std::abs(find_check(quantum_seal_bound_scenario(3), BoundId::QuantumSealD).lhs - 0.5) <
        1e-12);
  CHECK(std::abs(find_check(quantum_seal_bound_scenario(6), BoundId::QuantumSealD).lhs -
                 5.0 / 7.0) < 1e-12);

  const BoundReport qubit = quantum_seal_bound_scenario(2);
  const BoundCheck& d2 = find_check(qubit, BoundId::QuantumSealD2);
  CHECK(std::abs(d2.lhs - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(d2.margin) < 1e-12);
}
