#include "qseal/bridge.hpp"

#include <cmath>

namespace qseal {

namespace {

constexpr double kSchmidtTol = 1e-10;

struct SplitResult {
  PureState reader_factor;
  double second_coefficient = 0.0;
  bool product = false;
};

// Best rank-one split of the joint amplitudes across the owner/reader cut.
SplitResult split_product(const PureState& joint, int dim_alice, int dim_bob) {
  if (dim_alice == 1) {
    return SplitResult{joint, 0.0, true};
  }
  ComplexMatrix a(dim_alice, dim_bob);
  for (int i = 0; i < dim_alice; ++i) {
    for (int j = 0; j < dim_bob; ++j) a.at(i, j) = joint.amp(i * dim_bob + j);
  }
  const ComplexMatrix b = a.adjoint() * a;
  EigenSystem es = hermitian_eigensystem(b);
  const int n = b.rows();
  const double second_eigenvalue = n >= 2 ? std::max(0.0, es.values[static_cast<std::size_t>(n - 2)]) : 0.0;

  std::vector<Complex> w(static_cast<std::size_t>(dim_bob));
  for (int j = 0; j < dim_bob; ++j) w[static_cast<std::size_t>(j)] = es.vectors.at(j, n - 1);

  // Residual of the rank-one reconstruction; robust where the second
  // eigenvalue of a true product state sits in rounding noise.
  std::vector<Complex> aw(static_cast<std::size_t>(dim_alice), Complex(0.0, 0.0));
  for (int i = 0; i < dim_alice; ++i) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < dim_bob; ++j) acc += a.at(i, j) * w[static_cast<std::size_t>(j)];
    aw[static_cast<std::size_t>(i)] = acc;
  }
  double residual2 = 0.0;
  for (int i = 0; i < dim_alice; ++i) {
    for (int j = 0; j < dim_bob; ++j) {
      const Complex r =
          a.at(i, j) - aw[static_cast<std::size_t>(i)] * std::conj(w[static_cast<std::size_t>(j)]);
      residual2 += std::norm(r);
    }
  }

  SplitResult out{PureState::basis(dim_bob, 0), std::sqrt(second_eigenvalue), false};
  if (std::sqrt(residual2) <= kSchmidtTol) {
    std::vector<Complex> reader(static_cast<std::size_t>(dim_bob));
    for (int j = 0; j < dim_bob; ++j) reader[static_cast<std::size_t>(j)] = std::conj(w[static_cast<std::size_t>(j)]);
    out.reader_factor = PureState::normalized(std::move(reader));
    out.product = true;
  }
  return out;
}

}  // namespace

SealProtocol device_to_seal(const RepeatingDevice& dev, const ClassicalEncoding& enc) {
  if (dev.rule.kind != RuleKind::ClassicalDecode) {
    throw RuleKindError("device_to_seal: device must decode classical symbols");
  }
  if (enc.dim() != dev.instrument.dim()) {
    throw DimensionError("device_to_seal: encoding dimension mismatch");
  }
  std::vector<SealEncoding> encodings;
  for (int b = 0; b < enc.num_symbols(); ++b) {
    for (const auto& [state, cond] : enc.table[static_cast<std::size_t>(b)]) {
      encodings.push_back(SealEncoding{b, state, enc.prior[static_cast<std::size_t>(b)] * cond});
    }
  }
  return SealProtocol(1, dev.instrument.dim(), enc.num_symbols(), std::move(encodings),
                      dev.instrument, dev.rule.classical_map);
}

std::pair<RepeatingDevice, ClassicalEncoding> seal_to_device(const SealProtocol& p) {
  const int m = p.num_values();
  std::vector<std::vector<std::pair<PureState, double>>> table(static_cast<std::size_t>(m));
  std::vector<double> prior(static_cast<std::size_t>(m), 0.0);

  for (const SealEncoding& e : p.encodings()) {
    const SplitResult split = split_product(e.state, p.dim_alice(), p.dim_bob());
    if (!split.product) {
      throw NotProductError("seal_to_device: encoding for value " + std::to_string(e.value) +
                                " is entangled across the owner/reader split "
                                "(second Schmidt coefficient " +
                                std::to_string(split.second_coefficient) + ")",
                            e.value, split.second_coefficient);
    }
    table[static_cast<std::size_t>(e.value)].emplace_back(split.reader_factor, e.weight);
    prior[static_cast<std::size_t>(e.value)] += e.weight;
  }
  for (int b = 0; b < m; ++b) {
    if (table[static_cast<std::size_t>(b)].empty() || prior[static_cast<std::size_t>(b)] <= 0.0) {
      throw EncodingError("seal_to_device: sealed value " + std::to_string(b) +
                          " carries no weight");
    }
    for (auto& [state, w] : table[static_cast<std::size_t>(b)]) {
      w /= prior[static_cast<std::size_t>(b)];
    }
  }

  RepeatingDevice dev(p.decoder(), EstimationRule::classical(p.decode_map()));
  return {std::move(dev), ClassicalEncoding(std::move(table), std::move(prior))};
}

EquivalenceReport verify_equivalence(const RepeatingDevice& dev, const ClassicalEncoding& enc,
                                     double tol) {
  EquivalenceReport report;
  report.device_point = classical_estimation_fidelity(dev, enc);
  report.seal_point = evaluate_seal(device_to_seal(dev, enc));
  report.f_vs_one_minus_beta = std::abs(report.device_point.f - (1.0 - report.seal_point.beta));
  report.g_vs_alpha = std::abs(report.device_point.g - report.seal_point.alpha);
  report.tolerance = tol;
  report.pass = report.f_vs_one_minus_beta <= tol && report.g_vs_alpha <= tol;
  return report;
}

}  // namespace qseal
