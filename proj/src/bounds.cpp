#include "qseal/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace qseal {

namespace {

constexpr double kSatisfactionTol = 1e-9;

BoundCheck make_check(BoundId id, double lhs, double rhs) {
  BoundCheck c;
  c.id = id;
  c.lhs = lhs;
  c.rhs = rhs;
  c.margin = rhs - lhs;
  c.satisfied = c.margin >= -kSatisfactionTol;
  return c;
}

void check_dim(int d) {
  if (d < 2) throw DimensionError("bounds: dimension must be at least 2");
}

double tradeoff_general_lhs(double f, double g, int d) {
  const double f0 = (d + 2.0) / (2.0 * (d + 1.0));
  const double g0 = 3.0 / (2.0 * (d + 1.0));
  const double df = f - f0;
  const double dg = g - g0;
  return df * df + static_cast<double>(d) * d * dg * dg + 2.0 * (d - 2.0) * df * dg;
}

double tradeoff_d2_lhs(double f, double g) {
  const double df = f - 2.0 / 3.0;
  const double dg = g - 0.5;
  return df * df + 4.0 * dg * dg;
}

}  // namespace

std::string bound_name(BoundId id) {
  switch (id) {
    case BoundId::FRange: return "f_range";
    case BoundId::GRange: return "g_range";
    case BoundId::TradeoffGeneral: return "tradeoff_general";
    case BoundId::TradeoffD2: return "tradeoff_d2";
    case BoundId::BetaHalf: return "beta_half";
    case BoundId::AlphaBetaNineEighths: return "alpha_plus_beta";
    case BoundId::GMinusFEighth: return "g_minus_f";
    case BoundId::QuantumSealD: return "quantum_seal_d";
    case BoundId::QuantumSealD2: return "quantum_seal_d2";
  }
  return "unknown";
}

bool BoundReport::all_satisfied() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.satisfied; });
}

BoundReport evaluate(const TradeoffPoint& point, int d, const std::set<BoundId>& applicable) {
  check_dim(d);
  BoundReport report;
  for (BoundId id : applicable) {
    switch (id) {
      case BoundId::FRange: {
        // Range check folded into expr <= 0 form.
        const double low = 2.0 / (d + 1.0);
        report.checks.push_back(
            make_check(id, std::max(low - point.f, point.f - 1.0), 0.0));
        break;
      }
      case BoundId::GRange: {
        const double low = 1.0 / static_cast<double>(d);
        const double high = 2.0 / (d + 1.0);
        report.checks.push_back(
            make_check(id, std::max(low - point.g, point.g - high), 0.0));
        break;
      }
      case BoundId::TradeoffGeneral: {
        const double rhs = (d - 1.0) / ((d + 1.0) * (d + 1.0));
        report.checks.push_back(make_check(id, tradeoff_general_lhs(point.f, point.g, d), rhs));
        break;
      }
      case BoundId::TradeoffD2: {
        if (d != 2) throw ScopeError("bounds: qubit tradeoff form requested with d != 2");
        report.checks.push_back(make_check(id, tradeoff_d2_lhs(point.f, point.g), 1.0 / 9.0));
        break;
      }
      case BoundId::GMinusFEighth: {
        report.checks.push_back(make_check(id, point.g - point.f, 0.125));
        break;
      }
      default:
        throw ScopeError("bounds: " + bound_name(id) + " does not apply to a tradeoff point");
    }
  }
  return report;
}

BoundReport evaluate(const SealPoint& point, int d, const std::set<BoundId>& applicable) {
  check_dim(d);
  BoundReport report;
  for (BoundId id : applicable) {
    switch (id) {
      case BoundId::BetaHalf:
        report.checks.push_back(make_check(id, point.beta, 0.5));
        break;
      case BoundId::AlphaBetaNineEighths:
        report.checks.push_back(make_check(id, point.alpha + point.beta, 9.0 / 8.0));
        break;
      case BoundId::QuantumSealD:
        report.checks.push_back(make_check(id, point.beta, 1.0 - 2.0 / (d + 1.0)));
        break;
      case BoundId::QuantumSealD2:
        if (d != 2) throw ScopeError("bounds: qubit quantum-seal cap requested with d != 2");
        report.checks.push_back(make_check(id, point.beta, 1.0 / 3.0));
        break;
      default:
        throw ScopeError("bounds: " + bound_name(id) + " does not apply to a seal point");
    }
  }
  return report;
}

bool violation_witness_g(const TradeoffPoint& point) {
  return point.g >= 2.0 / 3.0 + 1e-12;
}

BoundReport quantum_seal_bound_scenario(int d) {
  check_dim(d);
  const TradeoffPoint fidelities =
      average_fidelities_exact(builtin_device(BuiltinDevice::MeasureReprepare, {.dim = d}));
  SealPoint point;
  point.alpha = fidelities.g;
  point.beta = 1.0 - fidelities.f;
  std::set<BoundId> applicable{BoundId::QuantumSealD};
  if (d == 2) applicable.insert(BoundId::QuantumSealD2);
  return evaluate(point, d, applicable);
}

}  // namespace qseal
