#pragma once

#include <map>
#include <vector>

#include "qseal/device.hpp"

namespace qseal {

// One sealed value together with the joint owner/reader state carrying it.
// Protocols sealing value b through several alternative states list one
// entry per state; the weights form the overall prior.
struct SealEncoding {
  int value = 0;
  PureState state;
  double weight = 0.0;
};

class SealProtocol {
 public:
  SealProtocol(int dim_alice, int dim_bob, int num_values, std::vector<SealEncoding> encodings,
               MeasurementInstrument decoder, std::map<int, int> decode_map);

  int dim_alice() const { return dim_alice_; }
  int dim_bob() const { return dim_bob_; }
  int num_values() const { return num_values_; }
  const std::vector<SealEncoding>& encodings() const { return encodings_; }
  const MeasurementInstrument& decoder() const { return decoder_; }
  const std::map<int, int>& decode_map() const { return decode_map_; }

  SealProtocol with_weights(std::vector<double> weights) const;

 private:
  int dim_alice_ = 1;
  int dim_bob_ = 2;
  int num_values_ = 2;
  std::vector<SealEncoding> encodings_;
  MeasurementInstrument decoder_;
  std::map<int, int> decode_map_;
};

struct SealPoint {
  double alpha = 0.0;
  double beta = 0.0;
};

// Average probability that the reader's decoded value matches the sealed one
// (unidentified outcomes guess uniformly over the value set).
double readability(const SealProtocol& p);

// Average probability that the owner's comparison with the original joint
// state detects the decoding.
double detection_probability(const SealProtocol& p);

SealPoint evaluate_seal(const SealProtocol& p);

// Per-encoding test of whether the suggested decoder leaves the sealed state
// undisturbed. No aggregate verdict: mixed protocols report mixed entries.
std::vector<bool> classify_perfect(const SealProtocol& p, double tol = 1e-12);

enum class BuiltinSeal { OptimalQbs, PerfectSeal, SimplifiedSeal };

SealProtocol builtin_seal(BuiltinSeal which);

}  // namespace qseal
