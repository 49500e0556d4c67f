#include "doctest.h"

#include <cmath>

#include "qseal/bridge.hpp"

using namespace qseal;

TEST_CASE("device_to_seal reproduces the fidelity identities") {
  // Oracle: beta = 1 - F with F = 3/4 from the device picture.
  const SealProtocol bb84_seal = device_to_seal(builtin_device(BuiltinDevice::Breidbart),
                                                builtin_encoding(BuiltinEncoding::Bb84));
  const SealPoint bb84 = evaluate_seal(bb84_seal);
  CHECK(std::abs(bb84.alpha - std::cos(M_PI / 8.0) * std::cos(M_PI / 8.0)) < 1e-12);
  CHECK(std::abs(bb84.beta - 0.25) < 1e-12);

  const SealPoint simplified = evaluate_seal(device_to_seal(
      builtin_device(BuiltinDevice::BasisDecode), builtin_encoding(BuiltinEncoding::Simplified)));
  CHECK(std::abs(simplified.alpha - 0.75) < 1e-12);
  CHECK(std::abs(simplified.beta - 0.375) < 1e-12);

  const SealPoint orthogonal = evaluate_seal(device_to_seal(
      builtin_device(BuiltinDevice::BasisDecode), builtin_encoding(BuiltinEncoding::Orthogonal)));
  CHECK(std::abs(orthogonal.alpha - 1.0) < 1e-12);
  CHECK(std::abs(orthogonal.beta - 0.0) < 1e-12);

  CHECK_THROWS_AS(device_to_seal(builtin_device(BuiltinDevice::DoNothing),
                                 builtin_encoding(BuiltinEncoding::Bb84)),
                  RuleKindError);
}

TEST_CASE("seal_to_device recovers device fidelities") {
  // Oracle: direct seal evaluation plus the F = 1 - beta, G = alpha identities.
  auto [dev, enc] = seal_to_device(builtin_seal(BuiltinSeal::SimplifiedSeal));
  const TradeoffPoint p = classical_estimation_fidelity(dev, enc);
  CHECK(std::abs(p.f - 0.625) < 1e-12);
  CHECK(std::abs(p.g - 0.75) < 1e-12);

  auto [pdev, penc] = seal_to_device(builtin_seal(BuiltinSeal::PerfectSeal));
  const TradeoffPoint pp = classical_estimation_fidelity(pdev, penc);
  CHECK(std::abs(pp.f - 1.0) < 1e-12);
  CHECK(std::abs(pp.g - 1.0) < 1e-12);
}

TEST_CASE("entangled encodings cannot cross to the device picture") {
  try {
    seal_to_device(builtin_seal(BuiltinSeal::OptimalQbs));
    FAIL("expected NotProductError");
  } catch (const NotProductError& e) {
    CHECK(e.value == 0);
    CHECK(std::abs(e.second_coefficient - 0.5) < 1e-10);
  }
}

TEST_CASE("product seals with a nontrivial owner system still convert") {
  // |phi> x |psi> with phi = |1>, psi = (|0>+|1>)/sqrt(2): product across the cut.
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<Complex> joint(4, Complex(0.0, 0.0));
  joint[2] = r;  // |1>|0>
  joint[3] = r;  // |1>|1>
  std::vector<Complex> joint2(4, Complex(0.0, 0.0));
  joint2[0] = r;
  joint2[1] = -r;
  MeasurementInstrument decoder = MeasurementInstrument::projective(
      {{0, PureState({Complex(r, 0.0), Complex(r, 0.0)})},
       {1, PureState({Complex(r, 0.0), Complex(-r, 0.0)})}});
  const SealProtocol p(2, 2, 2,
                       {{0, PureState(joint), 0.5}, {1, PureState(joint2), 0.5}},
                       decoder, {{0, 0}, {1, 1}});

  auto [dev, enc] = seal_to_device(p);
  const TradeoffPoint point = classical_estimation_fidelity(dev, enc);
  CHECK(std::abs(point.g - 1.0) < 1e-12);
  CHECK(std::abs(point.f - 1.0) < 1e-12);

  const SealPoint original = evaluate_seal(p);
  const SealPoint rebuilt = evaluate_seal(device_to_seal(dev, enc));
  CHECK(std::abs(original.alpha - rebuilt.alpha) < 1e-12);
  CHECK(std::abs(original.beta - rebuilt.beta) < 1e-12);
}

TEST_CASE("round trips preserve alpha and beta on product seals") {
  for (BuiltinSeal which : {BuiltinSeal::PerfectSeal, BuiltinSeal::SimplifiedSeal}) {
    const SealProtocol p = builtin_seal(which);
    const SealPoint before = evaluate_seal(p);
    auto [dev, enc] = seal_to_device(p);
    const SealPoint after = evaluate_seal(device_to_seal(dev, enc));
    CHECK(std::abs(before.alpha - after.alpha) < 1e-12);
    CHECK(std::abs(before.beta - after.beta) < 1e-12);
  }
}

TEST_CASE("verify_equivalence holds across the built-in catalog") {
  struct Pair {
    RepeatingDevice dev;
    ClassicalEncoding enc;
  };
  std::vector<Pair> catalog;
  catalog.push_back({builtin_device(BuiltinDevice::Breidbart),
                     builtin_encoding(BuiltinEncoding::Bb84)});
  catalog.push_back({builtin_device(BuiltinDevice::BasisDecode),
                     builtin_encoding(BuiltinEncoding::Simplified)});
  catalog.push_back({builtin_device(BuiltinDevice::BasisDecode),
                     builtin_encoding(BuiltinEncoding::Orthogonal)});
  // Weak-family instrument recast as a classical decoder on orthogonal carriers.
  catalog.push_back(
      {RepeatingDevice(builtin_device(BuiltinDevice::WeakFamily, {.lambda = 0.3}).instrument,
                       EstimationRule::classical({{0, 0}, {1, 1}})),
       builtin_encoding(BuiltinEncoding::Orthogonal)});
  // Do-nothing device: single outcome, decoded by guessing.
  catalog.push_back(
      {RepeatingDevice(builtin_device(BuiltinDevice::DoNothing).instrument,
                       EstimationRule::classical({{0, kUnidentified}})),
       builtin_encoding(BuiltinEncoding::Bb84)});

  for (const Pair& pair : catalog) {
    const EquivalenceReport report = verify_equivalence(pair.dev, pair.enc, 1e-12);
    CHECK(report.pass);
    CHECK(report.f_vs_one_minus_beta <= 1e-12);
    CHECK(report.g_vs_alpha <= 1e-12);
  }

  // The do-nothing entry leaves carriers untouched: F = 1, beta = 0.
  const EquivalenceReport idle = verify_equivalence(
      RepeatingDevice(builtin_device(BuiltinDevice::DoNothing).instrument,
                      EstimationRule::classical({{0, kUnidentified}})),
      builtin_encoding(BuiltinEncoding::Bb84), 1e-12);
  CHECK(std::abs(idle.device_point.f - 1.0) < 1e-12);
  CHECK(std::abs(idle.seal_point.beta - 0.0) < 1e-12);
}
