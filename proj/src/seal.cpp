#include "qseal/seal.hpp"

#include <cmath>

namespace qseal {

namespace {

constexpr double kWeightSumTol = 1e-12;

// (I_A xor M) |state>, acting on each owner-side block of length dim_bob.
std::vector<Complex> apply_on_reader(const ComplexMatrix& m, const PureState& joint,
                                     int dim_alice, int dim_bob) {
  std::vector<Complex> out(static_cast<std::size_t>(dim_alice) * dim_bob, Complex(0.0, 0.0));
  for (int a = 0; a < dim_alice; ++a) {
    const std::size_t base = static_cast<std::size_t>(a) * dim_bob;
    for (int i = 0; i < dim_bob; ++i) {
      Complex acc(0.0, 0.0);
      for (int j = 0; j < dim_bob; ++j) acc += m.at(i, j) * joint.amp(static_cast<int>(base) + j);
      out[base + static_cast<std::size_t>(i)] = acc;
    }
  }
  return out;
}

Complex overlap_with(const PureState& joint, const std::vector<Complex>& v) {
  Complex acc(0.0, 0.0);
  for (int i = 0; i < joint.dim(); ++i) acc += std::conj(joint.amp(i)) * v[static_cast<std::size_t>(i)];
  return acc;
}

double squared_norm(const std::vector<Complex>& v) {
  double acc = 0.0;
  for (const Complex& x : v) acc += std::norm(x);
  return acc;
}

}  // namespace

SealProtocol::SealProtocol(int dim_alice, int dim_bob, int num_values,
                           std::vector<SealEncoding> encodings, MeasurementInstrument decoder,
                           std::map<int, int> decode_map)
    : dim_alice_(dim_alice),
      dim_bob_(dim_bob),
      num_values_(num_values),
      encodings_(std::move(encodings)),
      decoder_(std::move(decoder)),
      decode_map_(std::move(decode_map)) {
  if (dim_alice_ < 1) throw ProtocolError("SealProtocol: owner dimension must be at least 1");
  if (dim_bob_ < 2) throw ProtocolError("SealProtocol: reader dimension must be at least 2");
  if (num_values_ < 2) throw ProtocolError("SealProtocol: need at least two sealed values");
  if (decoder_.dim() != dim_bob_) {
    throw DimensionError("SealProtocol: decoder acts on dimension " +
                         std::to_string(decoder_.dim()) + ", reader system has " +
                         std::to_string(dim_bob_));
  }
  if (encodings_.empty()) throw ProtocolError("SealProtocol: no encodings");
  double total = 0.0;
  for (const SealEncoding& e : encodings_) {
    if (e.value < 0 || e.value >= num_values_) {
      throw ProtocolError("SealProtocol: encoding value " + std::to_string(e.value) +
                          " outside 0.." + std::to_string(num_values_ - 1));
    }
    if (e.state.dim() != dim_alice_ * dim_bob_) {
      throw DimensionError("SealProtocol: encoding state has dimension " +
                           std::to_string(e.state.dim()) + ", expected " +
                           std::to_string(dim_alice_ * dim_bob_));
    }
    if (e.weight < 0.0) throw ProtocolError("SealProtocol: negative weight");
    total += e.weight;
  }
  if (std::abs(total - 1.0) > kWeightSumTol) {
    throw ProtocolError("SealProtocol: weights sum to " + std::to_string(total));
  }
  for (int label : decoder_.labels()) {
    auto it = decode_map_.find(label);
    if (it == decode_map_.end()) {
      throw ProtocolError("SealProtocol: outcome " + std::to_string(label) +
                          " missing from decode map");
    }
    if (it->second != kUnidentified && (it->second < 0 || it->second >= num_values_)) {
      throw ProtocolError("SealProtocol: outcome " + std::to_string(label) +
                          " decodes to invalid value " + std::to_string(it->second));
    }
  }
  if (decode_map_.size() != decoder_.kraus().size()) {
    throw ProtocolError("SealProtocol: decode map covers outcomes the decoder does not have");
  }
}

SealProtocol SealProtocol::with_weights(std::vector<double> weights) const {
  if (weights.size() != encodings_.size()) {
    throw ProtocolError("with_weights: weight count mismatch");
  }
  std::vector<SealEncoding> updated = encodings_;
  for (std::size_t i = 0; i < updated.size(); ++i) updated[i].weight = weights[i];
  return SealProtocol(dim_alice_, dim_bob_, num_values_, std::move(updated), decoder_,
                      decode_map_);
}

double readability(const SealProtocol& p) {
  const double guess_credit = 1.0 / static_cast<double>(p.num_values());
  double alpha = 0.0;
  for (const SealEncoding& e : p.encodings()) {
    if (e.weight == 0.0) continue;
    double correct = 0.0;
    for (const auto& [label, m] : p.decoder().kraus()) {
      const int target = p.decode_map().at(label);
      if (target != e.value && target != kUnidentified) continue;
      const double prob =
          squared_norm(apply_on_reader(m, e.state, p.dim_alice(), p.dim_bob()));
      correct += (target == e.value) ? prob : guess_credit * prob;
    }
    alpha += e.weight * correct;
  }
  return alpha;
}

double detection_probability(const SealProtocol& p) {
  // sum_k p_k (1 - |<enc|post_k>|^2) = 1 - sum_k |<enc|(I x M_k)|enc>|^2
  double beta = 0.0;
  for (const SealEncoding& e : p.encodings()) {
    if (e.weight == 0.0) continue;
    double survival = 0.0;
    for (const auto& [label, m] : p.decoder().kraus()) {
      const std::vector<Complex> y = apply_on_reader(m, e.state, p.dim_alice(), p.dim_bob());
      survival += std::norm(overlap_with(e.state, y));
    }
    beta += e.weight * (1.0 - survival);
  }
  return beta;
}

SealPoint evaluate_seal(const SealProtocol& p) {
  return SealPoint{readability(p), detection_probability(p)};
}

std::vector<bool> classify_perfect(const SealProtocol& p, double tol) {
  std::vector<bool> out;
  out.reserve(p.encodings().size());
  for (const SealEncoding& e : p.encodings()) {
    double survival = 0.0;
    for (const auto& [label, m] : p.decoder().kraus()) {
      const std::vector<Complex> y = apply_on_reader(m, e.state, p.dim_alice(), p.dim_bob());
      survival += std::norm(overlap_with(e.state, y));
    }
    out.push_back(1.0 - survival <= tol);
  }
  return out;
}

SealProtocol builtin_seal(BuiltinSeal which) {
  switch (which) {
    case BuiltinSeal::OptimalQbs: {
      // Joint states (sqrt(3)/2)|f_b e_b> + (1/2)|f_b' e_b'> over two qubits,
      // decoded by a projective measurement on the reader side.
      const double major = std::sqrt(3.0) / 2.0;
      const double minor = 0.5;
      std::vector<Complex> enc0(4, Complex(0.0, 0.0));
      enc0[0] = major;  // |0>|0>
      enc0[3] = minor;  // |1>|1>
      std::vector<Complex> enc1(4, Complex(0.0, 0.0));
      enc1[3] = major;
      enc1[0] = minor;
      MeasurementInstrument decoder = MeasurementInstrument::projective(
          {{0, PureState::basis(2, 0)}, {1, PureState::basis(2, 1)}});
      return SealProtocol(2, 2, 2,
                          {{0, PureState(std::move(enc0)), 0.5},
                           {1, PureState(std::move(enc1)), 0.5}},
                          std::move(decoder), {{0, 0}, {1, 1}});
    }
    case BuiltinSeal::PerfectSeal: {
      MeasurementInstrument decoder = MeasurementInstrument::projective(
          {{0, PureState::basis(2, 0)}, {1, PureState::basis(2, 1)}});
      return SealProtocol(1, 2, 2,
                          {{0, PureState::basis(2, 0), 0.5}, {1, PureState::basis(2, 1), 0.5}},
                          std::move(decoder), {{0, 0}, {1, 1}});
    }
    case BuiltinSeal::SimplifiedSeal: {
      const double a = std::sqrt(3.0) / 2.0;
      const double b = 0.5;
      MeasurementInstrument decoder = MeasurementInstrument::projective(
          {{0, PureState::basis(2, 0)}, {1, PureState::basis(2, 1)}});
      return SealProtocol(1, 2, 2,
                          {{0, PureState({Complex(a, 0.0), Complex(b, 0.0)}), 0.25},
                           {0, PureState({Complex(a, 0.0), Complex(-b, 0.0)}), 0.25},
                           {1, PureState({Complex(b, 0.0), Complex(a, 0.0)}), 0.25},
                           {1, PureState({Complex(b, 0.0), Complex(-a, 0.0)}), 0.25}},
                          std::move(decoder), {{0, 0}, {1, 1}});
    }
  }
  throw ConfigError("builtin_seal: unknown seal");
}

}  // namespace qseal
