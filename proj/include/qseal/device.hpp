#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseal/core.hpp"

namespace qseal {

enum class RuleKind { QuantumEstimate, ClassicalDecode };

// Decode-map target for outcomes that identify no symbol.
inline constexpr int kUnidentified = -1;

// One Kraus operator per outcome; Pi_k = M_k^dag M_k form the POVM.
class MeasurementInstrument {
 public:
  MeasurementInstrument(int dim, std::vector<std::pair<int, ComplexMatrix>> kraus);

  // Default Kraus choice for a bare POVM: M_k = sqrt(Pi_k).
  static MeasurementInstrument from_povm(int dim, const std::vector<std::pair<int, ComplexMatrix>>& elements);
  static MeasurementInstrument projective(const std::vector<std::pair<int, PureState>>& basis);

  int dim() const { return dim_; }
  const std::vector<std::pair<int, ComplexMatrix>>& kraus() const { return kraus_; }
  ComplexMatrix povm_element(int label) const;
  std::vector<int> labels() const;

 private:
  int dim_ = 0;
  std::vector<std::pair<int, ComplexMatrix>> kraus_;
};

// Outcome -> estimate. Either a quantum state guess or a classical symbol.
struct EstimationRule {
  RuleKind kind = RuleKind::QuantumEstimate;
  std::map<int, PureState> quantum_map;
  std::map<int, int> classical_map;

  static EstimationRule quantum(std::map<int, PureState> estimates);
  static EstimationRule classical(std::map<int, int> decode);
};

struct RepeatingDevice {
  RepeatingDevice(MeasurementInstrument instrument, EstimationRule rule);
  MeasurementInstrument instrument;
  EstimationRule rule;
};

struct Alphabet {
  enum class Kind { HaarUniform, Discrete };
  Kind kind = Kind::HaarUniform;
  int dim = 2;
  std::vector<std::pair<PureState, double>> members;  // Discrete only

  static Alphabet haar(int dim);
  static Alphabet discrete(std::vector<std::pair<PureState, double>> members);
};

// Classical symbols carried by quantum states: symbol b is sent as one of
// several states with given conditional probabilities.
struct ClassicalEncoding {
  ClassicalEncoding(std::vector<std::vector<std::pair<PureState, double>>> table,
                    std::vector<double> prior);

  int num_symbols() const { return static_cast<int>(table.size()); }
  int dim() const;

  std::vector<std::vector<std::pair<PureState, double>>> table;  // symbol -> (state, p(s|b))
  std::vector<double> prior;
};

struct McStats {
  long long samples = 0;
  int workers = 1;
  double se_f = 0.0;
  double se_g = 0.0;
};

struct TradeoffPoint {
  double f = 0.0;
  double g = 0.0;
  int dim = 2;
  RuleKind kind = RuleKind::QuantumEstimate;
  std::optional<McStats> mc;  // present only for sampled results
};

struct OutcomeBranch {
  int label = 0;
  double probability = 0.0;
  PureState state;
};

// Runs the instrument on a state: outcome probabilities and conditional
// states, null branches (p <= 1e-14) omitted.
std::vector<OutcomeBranch> apply_instrument(const MeasurementInstrument& instr,
                                            const PureState& psi);

double transmission_fidelity_pointwise(const RepeatingDevice& dev, const PureState& psi);
double estimation_fidelity_pointwise(const RepeatingDevice& dev, const PureState& psi);

// Monte Carlo average over the alphabet; Discrete alphabets are summed
// exactly instead. Worker w samples from rng.derived(rng.stream() + w), so a
// fixed (seed, workers) pair is reproducible regardless of scheduling.
TradeoffPoint average_fidelities_mc(const RepeatingDevice& dev, const Alphabet& alphabet,
                                    long long samples, const RngStream& rng, int workers = 1);

// Closed-form Haar average of both fidelities via second-moment identities.
TradeoffPoint average_fidelities_exact(const RepeatingDevice& dev);

// Average probability of decoding the correct symbol (unidentified outcomes
// credit 1/m), plus the exactly-weighted transmission fidelity.
TradeoffPoint classical_estimation_fidelity(const RepeatingDevice& dev,
                                            const ClassicalEncoding& enc);

enum class BuiltinDevice { DoNothing, MeasureReprepare, Breidbart, WeakFamily, BasisDecode };

struct DeviceParams {
  int dim = 2;
  double lambda = 0.0;  // WeakFamily only
  int guess = 0;        // DoNothing estimate index
};

RepeatingDevice builtin_device(BuiltinDevice which, const DeviceParams& params = {});

enum class BuiltinEncoding { Bb84, Simplified, Orthogonal };

ClassicalEncoding builtin_encoding(BuiltinEncoding which);

// Random instrument with the given outcome count (Gaussian Kraus candidates,
// completeness restored by the inverse square root of their sum) and Haar
// estimates. Used for cross-checking the exact averages against sampling.
RepeatingDevice random_quantum_device(int dim, int outcomes, RngStream& rng);

}  // namespace qseal
