#pragma once

#include <utility>

#include "qseal/seal.hpp"

namespace qseal {

// Casts a classical-decode device plus its encoding as a seal protocol with a
// trivial owner system: the owner verifies survival of the known carrier.
SealProtocol device_to_seal(const RepeatingDevice& dev, const ClassicalEncoding& enc);

// Inverse direction. Every encoding must factor across the owner/reader
// split (or the owner system must be trivial); entangled encodings have no
// device counterpart and are rejected.
std::pair<RepeatingDevice, ClassicalEncoding> seal_to_device(const SealProtocol& p);

struct EquivalenceReport {
  TradeoffPoint device_point;
  SealPoint seal_point;
  double f_vs_one_minus_beta = 0.0;
  double g_vs_alpha = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Evaluates both pictures of the same (device, encoding) pair and checks
// F = 1 - beta and G = alpha to the given tolerance.
EquivalenceReport verify_equivalence(const RepeatingDevice& dev, const ClassicalEncoding& enc,
                                     double tol);

}  // namespace qseal
