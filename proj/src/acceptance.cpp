#include "qseal/acceptance.hpp"

#include <cmath>
#include <sstream>

#include "qseal/bounds.hpp"
#include "qseal/bridge.hpp"
#include "qseal/frontier.hpp"

namespace qseal {

namespace {

struct Worst {
  double value = 0.0;
  void add(double x) { value = std::max(value, std::abs(x)); }
};

std::string describe(double worst, double tol) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << "worst deviation " << worst << " (tol " << tol << ")";
  return os.str();
}

constexpr double kCos2Pi8 = 0.8535533905932737;  // cos^2(pi/8)

CriterionResult criterion_do_nothing(const AcceptanceTolerances& tol) {
  Worst worst;
  for (int d = 2; d <= 6; ++d) {
    const TradeoffPoint p =
        average_fidelities_exact(builtin_device(BuiltinDevice::DoNothing, {.dim = d}));
    worst.add(p.f - 1.0);
    worst.add(p.g - 1.0 / d);
  }
  return {1, "do-nothing device: F = 1, G = 1/d for d = 2..6", worst.value <= tol.exact, false,
          describe(worst.value, tol.exact)};
}

CriterionResult criterion_measure_reprepare(const AcceptanceTolerances& tol) {
  Worst worst;
  for (int d = 2; d <= 6; ++d) {
    const TradeoffPoint p =
        average_fidelities_exact(builtin_device(BuiltinDevice::MeasureReprepare, {.dim = d}));
    worst.add(p.f - 2.0 / (d + 1.0));
    worst.add(p.g - 2.0 / (d + 1.0));
  }
  return {2, "measure-and-reprepare device: F = G = 2/(d+1) for d = 2..6",
          worst.value <= tol.exact, false, describe(worst.value, tol.exact)};
}

CriterionResult criterion_weak_family(const AcceptanceTolerances& tol) {
  Worst ellipse, closed, sampled;
  bool mc_ok = true;
  for (int i = 0; i <= 10; ++i) {
    const double lambda = 0.05 * i;
    const RepeatingDevice dev = builtin_device(BuiltinDevice::WeakFamily, {.lambda = lambda});
    const TradeoffPoint exact = average_fidelities_exact(dev);

    const double lhs = (exact.f - 2.0 / 3.0) * (exact.f - 2.0 / 3.0) +
                       4.0 * (exact.g - 0.5) * (exact.g - 0.5);
    ellipse.add(lhs - 1.0 / 9.0);

    const double f_closed = (2.0 + 2.0 * std::sqrt(0.25 - lambda * lambda)) / 3.0;
    const double g_closed = 0.5 + lambda / 3.0;
    closed.add(exact.f - f_closed);
    closed.add(exact.g - g_closed);

    const TradeoffPoint mc =
        average_fidelities_mc(dev, Alphabet::haar(2), 100000, RngStream(3000 + i, 0));
    sampled.add(mc.f - exact.f);
    sampled.add(mc.g - exact.g);
    mc_ok = mc_ok && std::abs(mc.f - exact.f) <= tol.mc_sigmas * std::max(mc.mc->se_f, 1e-15) &&
            std::abs(mc.g - exact.g) <= tol.mc_sigmas * std::max(mc.mc->se_g, 1e-15);
  }
  const bool passed = ellipse.value <= tol.saturation && closed.value <= tol.exact && mc_ok;
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << "ellipse residual " << ellipse.value << " (tol " << tol.saturation
     << "), closed-form gap " << closed.value << " (tol " << tol.exact << "), worst MC gap "
     << sampled.value;
  return {3, "weak family saturates the qubit tradeoff curve; closed form matches exact and MC",
          passed, true, os.str()};
}

CriterionResult criterion_breidbart(const AcceptanceTolerances& tol) {
  const TradeoffPoint p = classical_estimation_fidelity(builtin_device(BuiltinDevice::Breidbart),
                                                        builtin_encoding(BuiltinEncoding::Bb84));
  Worst worst;
  worst.add(p.g - kCos2Pi8);
  worst.add(p.f - 0.75);
  worst.add((p.g - p.f) - 0.1035533905932737);

  const BoundReport report = evaluate(p, 2, {BoundId::TradeoffD2, BoundId::GMinusFEighth});
  bool ellipse_violated = false;
  bool cap_satisfied = false;
  double lhs_gap = 1.0;
  for (const BoundCheck& c : report.checks) {
    if (c.id == BoundId::TradeoffD2) {
      ellipse_violated = !c.satisfied;
      lhs_gap = std::abs(c.lhs - (1.0 / 144.0 + 0.5));
    }
    if (c.id == BoundId::GMinusFEighth) cap_satisfied = c.satisfied;
  }
  worst.add(lhs_gap);
  const bool passed = worst.value <= tol.exact && ellipse_violated && cap_satisfied &&
                      violation_witness_g(p) && (p.g - p.f) < 0.125;
  return {4,
          "breidbart on bb84: G = cos^2(pi/8), F = 3/4, quantum curve violated, G-F < 1/8",
          passed, false, describe(worst.value, tol.exact)};
}

CriterionResult criterion_optimal_qbs(const AcceptanceTolerances& tol) {
  const SealPoint p = evaluate_seal(builtin_seal(BuiltinSeal::OptimalQbs));
  Worst worst;
  worst.add(p.alpha - 0.75);
  worst.add(p.beta - 0.375);
  worst.add(p.alpha + p.beta - 9.0 / 8.0);

  const BoundReport report = evaluate(p, 2, {BoundId::BetaHalf, BoundId::AlphaBetaNineEighths});
  bool sum_margin_zero = false;
  for (const BoundCheck& c : report.checks) {
    if (c.id == BoundId::AlphaBetaNineEighths) sum_margin_zero = std::abs(c.margin) <= tol.exact;
  }
  const bool passed = worst.value <= tol.exact && report.all_satisfied() && sum_margin_zero;
  return {5, "optimal qbs seal: alpha = 3/4, beta = 3/8, alpha+beta = 9/8 with margin 0", passed,
          false, describe(worst.value, tol.exact)};
}

CriterionResult criterion_simplified(const AcceptanceTolerances& tol) {
  const TradeoffPoint device = classical_estimation_fidelity(
      builtin_device(BuiltinDevice::BasisDecode), builtin_encoding(BuiltinEncoding::Simplified));
  const SealPoint seal = evaluate_seal(builtin_seal(BuiltinSeal::SimplifiedSeal));
  Worst worst;
  worst.add(device.g - 0.75);
  worst.add(device.f - 0.625);
  worst.add((device.g - device.f) - 0.125);
  worst.add(seal.alpha - 0.75);
  worst.add(seal.beta - 0.375);
  return {6, "simplified example: G = 3/4, F = 5/8, G-F saturates 1/8 in both pictures",
          worst.value <= tol.exact, false, describe(worst.value, tol.exact)};
}

CriterionResult criterion_perfect_seal(const AcceptanceTolerances& tol) {
  const SealPoint p = evaluate_seal(builtin_seal(BuiltinSeal::PerfectSeal));
  Worst worst;
  worst.add(p.alpha - 1.0);
  worst.add(p.beta - 0.0);
  return {7, "perfect seal: alpha = 1, beta = 0", worst.value <= tol.exact, false,
          describe(worst.value, tol.exact)};
}

CriterionResult criterion_equivalence(const AcceptanceTolerances& tol) {
  Worst worst;
  const auto check_pair = [&](const RepeatingDevice& dev, const ClassicalEncoding& enc) {
    const EquivalenceReport r = verify_equivalence(dev, enc, tol.exact);
    worst.add(r.f_vs_one_minus_beta);
    worst.add(r.g_vs_alpha);
  };
  check_pair(builtin_device(BuiltinDevice::Breidbart), builtin_encoding(BuiltinEncoding::Bb84));
  check_pair(builtin_device(BuiltinDevice::BasisDecode),
             builtin_encoding(BuiltinEncoding::Simplified));
  check_pair(builtin_device(BuiltinDevice::BasisDecode),
             builtin_encoding(BuiltinEncoding::Orthogonal));
  check_pair(RepeatingDevice(builtin_device(BuiltinDevice::WeakFamily, {.lambda = 0.3}).instrument,
                             EstimationRule::classical({{0, 0}, {1, 1}})),
             builtin_encoding(BuiltinEncoding::Orthogonal));
  check_pair(RepeatingDevice(builtin_device(BuiltinDevice::DoNothing).instrument,
                             EstimationRule::classical({{0, kUnidentified}})),
             builtin_encoding(BuiltinEncoding::Bb84));

  for (BuiltinSeal which : {BuiltinSeal::PerfectSeal, BuiltinSeal::SimplifiedSeal}) {
    const SealProtocol p = builtin_seal(which);
    const SealPoint before = evaluate_seal(p);
    auto [dev, enc] = seal_to_device(p);
    const SealPoint after = evaluate_seal(device_to_seal(dev, enc));
    worst.add(before.alpha - after.alpha);
    worst.add(before.beta - after.beta);
  }
  return {8, "device/seal equivalence: F = 1-beta, G = alpha; round trips preserve (alpha, beta)",
          worst.value <= tol.exact, false, describe(worst.value, tol.exact)};
}

CriterionResult criterion_quantum_data_seal(const AcceptanceTolerances& tol) {
  Worst worst;
  for (int d = 2; d <= 8; ++d) {
    const BoundReport report = quantum_seal_bound_scenario(d);
    for (const BoundCheck& c : report.checks) {
      if (c.id == BoundId::QuantumSealD) {
        worst.add(c.lhs - (d - 1.0) / (d + 1.0));
        worst.add(c.margin);
      }
      if (c.id == BoundId::QuantumSealD2) {
        worst.add(c.lhs - 1.0 / 3.0);
        worst.add(c.margin);
      }
    }
  }
  return {9, "quantum-data sealing: beta = (d-1)/(d+1) saturates its cap for d = 2..8",
          worst.value <= tol.exact, false, describe(worst.value, tol.exact)};
}

CriterionResult criterion_mc_agreement(const AcceptanceTolerances& tol) {
  Worst worst_sigmas;
  bool passed = true;
  for (int i = 0; i < 20; ++i) {
    const int d = 2 + i % 3;
    const int outcomes = 2 + (i / 3) % 3;
    RngStream construction(90210, static_cast<std::uint64_t>(i));
    const RepeatingDevice dev = random_quantum_device(d, outcomes, construction);
    const TradeoffPoint exact = average_fidelities_exact(dev);
    const TradeoffPoint mc = average_fidelities_mc(dev, Alphabet::haar(d), 100000,
                                                   RngStream(777000 + i, 0));
    const double sig_f = std::abs(mc.f - exact.f) / std::max(mc.mc->se_f, 1e-15);
    const double sig_g = std::abs(mc.g - exact.g) / std::max(mc.mc->se_g, 1e-15);
    worst_sigmas.add(sig_f);
    worst_sigmas.add(sig_g);
    passed = passed && sig_f <= tol.mc_sigmas && sig_g <= tol.mc_sigmas;
  }
  std::ostringstream os;
  os.precision(3);
  os << "worst deviation " << worst_sigmas.value << " standard errors (tol " << tol.mc_sigmas
     << ")";
  return {10, "exact vs Monte Carlo agreement on 20 seeded random devices (d = 2..4)", passed,
          true, os.str()};
}

CriterionResult criterion_frontier(const AcceptanceTolerances& tol) {
  const DeviceFamily weak = builtin_family(BuiltinFamily::Weak);
  Worst worst;
  for (int i = 0; i <= 9; ++i) {
    const double f = 2.0 / 3.0 + (1.0 / 3.0) * i / 9.0;
    const auto [theta, point] = maximize_g_at_f(weak, f);
    const double half_span = (3.0 * f - 2.0) / 2.0;
    const double best_g = 0.5 + std::sqrt(std::max(0.0, 0.25 - half_span * half_span)) / 3.0;
    worst.add(point.g - best_g);
  }
  const bool inverse_ok = worst.value <= tol.frontier;

  const FrontierResult sweep_result = sweep(builtin_family(BuiltinFamily::BreidbartAngle), {101});
  double best_g = -1.0, best_angle = 0.0;
  for (const FrontierSample& s : sweep_result.samples) {
    if (s.point.g > best_g) {
      best_g = s.point.g;
      best_angle = s.theta[0];
    }
  }
  const double spacing = (M_PI / 4.0) / 100.0;
  const bool angle_ok = std::abs(best_angle - M_PI / 8.0) <= spacing + 1e-12;

  std::ostringstream os;
  os.precision(3);
  os << std::scientific << "worst inverse gap " << worst.value << " (tol " << tol.frontier
     << "), peak angle offset " << std::abs(best_angle - M_PI / 8.0);
  return {11, "frontier search recovers the weak-family inverse; sweep peaks at pi/8",
          inverse_ok && angle_ok, false, os.str()};
}

}  // namespace

std::vector<CriterionResult> verify_all(const AcceptanceTolerances& tol) {
  std::vector<CriterionResult> results;
  results.push_back(criterion_do_nothing(tol));
  results.push_back(criterion_measure_reprepare(tol));
  results.push_back(criterion_weak_family(tol));
  results.push_back(criterion_breidbart(tol));
  results.push_back(criterion_optimal_qbs(tol));
  results.push_back(criterion_simplified(tol));
  results.push_back(criterion_perfect_seal(tol));
  results.push_back(criterion_equivalence(tol));
  results.push_back(criterion_quantum_data_seal(tol));
  results.push_back(criterion_mc_agreement(tol));
  results.push_back(criterion_frontier(tol));
  return results;
}

}  // namespace qseal
