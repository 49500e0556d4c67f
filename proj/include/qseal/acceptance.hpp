#pragma once

#include <string>
#include <vector>

namespace qseal {

struct AcceptanceTolerances {
  double exact = 1e-12;      // closed-form identities
  double mc_sigmas = 4.0;    // sampling agreement, in standard errors
  double saturation = 1e-10; // tradeoff-curve saturation residual
  double frontier = 1e-5;    // optimizer vs closed-form inverse
};

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  bool statistical = false;  // a failure here may be sampling noise, not logic
  std::string detail;
};

// The full verification suite: every headline value and bound of the model,
// one result per criterion. Runs in seconds.
std::vector<CriterionResult> verify_all(const AcceptanceTolerances& tol = {});

}  // namespace qseal
