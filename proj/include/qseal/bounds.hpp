#pragma once

#include <set>
#include <string>
#include <vector>

#include "qseal/device.hpp"
#include "qseal/seal.hpp"

namespace qseal {

// The inequalities the library can evaluate on a tradeoff or seal point.
enum class BoundId {
  FRange,                // lower/upper range of the transmission fidelity
  GRange,                // range of the quantum estimation fidelity
  TradeoffGeneral,       // quadratic F/G tradeoff, any dimension
  TradeoffD2,            // qubit ellipse form of the tradeoff
  BetaHalf,              // detection probability cap for bit seals
  AlphaBetaNineEighths,  // readability + detection cap for bit seals
  GMinusFEighth,         // classical-decoding tradeoff cap
  QuantumSealD,          // detection cap when sealing quantum data, dimension d
  QuantumSealD2,         // qubit case of the quantum-data cap
};

std::string bound_name(BoundId id);

struct BoundCheck {
  BoundId id = BoundId::FRange;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool satisfied = false;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool all_satisfied() const;
};

// Bounds are never auto-selected; the caller declares which apply, since the
// quantum-estimation bounds do not govern classical decoding.
BoundReport evaluate(const TradeoffPoint& point, int d, const std::set<BoundId>& applicable);
BoundReport evaluate(const SealPoint& point, int d, const std::set<BoundId>& applicable);

// True iff the estimation fidelity alone already forces the qubit tradeoff
// ellipse to be violated (G strictly above 2/3).
bool violation_witness_g(const TradeoffPoint& point);

// Detection probability reachable when a d-dimensional state seals quantum
// data, realized by the optimal-information device; reports saturation of
// the quantum-data caps.
BoundReport quantum_seal_bound_scenario(int d);

}  // namespace qseal
