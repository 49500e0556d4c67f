#include "qseal/device.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

namespace qseal {

namespace {

constexpr double kCompletenessTol = 1e-8;
constexpr double kProbabilitySumTol = 1e-12;

ComplexMatrix rank_one(const PureState& ket, const PureState& bra) {
  ComplexMatrix m(ket.dim(), bra.dim());
  for (int i = 0; i < ket.dim(); ++i) {
    for (int j = 0; j < bra.dim(); ++j) m.at(i, j) = ket.amp(i) * std::conj(bra.amp(j));
  }
  return m;
}

// <psi| M |psi>
Complex expectation(const ComplexMatrix& m, const PureState& psi) {
  const std::vector<Complex> y = apply(m, psi.amplitudes());
  Complex acc(0.0, 0.0);
  for (int i = 0; i < psi.dim(); ++i) acc += std::conj(psi.amp(i)) * y[static_cast<std::size_t>(i)];
  return acc;
}

double squared_norm(const std::vector<Complex>& v) {
  double acc = 0.0;
  for (const Complex& x : v) acc += std::norm(x);
  return acc;
}

void check_rule_kind(const RepeatingDevice& dev, RuleKind expected, const char* op) {
  if (dev.rule.kind != expected) {
    throw RuleKindError(std::string(op) + ": estimation rule has the wrong kind");
  }
}

struct McAccumulator {
  double sum_f = 0.0, sum_f2 = 0.0;
  double sum_g = 0.0, sum_g2 = 0.0;
  long long count = 0;

  void add(double f, double g) {
    sum_f += f;
    sum_f2 += f * f;
    sum_g += g;
    sum_g2 += g * g;
    ++count;
  }
};

ComplexMatrix inverse_sqrt(const ComplexMatrix& m) {
  EigenSystem es = hermitian_eigensystem(m);
  const int n = m.rows();
  ComplexMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < n; ++k) {
        const double lambda = es.values[static_cast<std::size_t>(k)];
        if (lambda <= 0.0) throw NotPsdError("inverse_sqrt: non-positive eigenvalue");
        acc += es.vectors.at(i, k) * (1.0 / std::sqrt(lambda)) * std::conj(es.vectors.at(j, k));
      }
      out.at(i, j) = acc;
    }
  }
  return out;
}

}  // namespace

MeasurementInstrument::MeasurementInstrument(int dim,
                                             std::vector<std::pair<int, ComplexMatrix>> kraus)
    : dim_(dim), kraus_(std::move(kraus)) {
  if (dim_ < 2) throw DimensionError("MeasurementInstrument: dimension must be at least 2");
  if (kraus_.empty()) throw CompletenessError("MeasurementInstrument: no outcomes");
  std::set<int> seen;
  for (const auto& [label, m] : kraus_) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw DimensionError("MeasurementInstrument: Kraus operator for outcome " +
                           std::to_string(label) + " is not " + std::to_string(dim_) + "x" +
                           std::to_string(dim_));
    }
    if (!m.is_finite()) throw CompletenessError("MeasurementInstrument: non-finite Kraus entry");
    if (!seen.insert(label).second) {
      throw CompletenessError("MeasurementInstrument: duplicate outcome label " +
                              std::to_string(label));
    }
  }
  ComplexMatrix sum(dim_, dim_);
  for (const auto& [label, m] : kraus_) sum = sum + m.adjoint() * m;
  const double deviation = (sum - ComplexMatrix::identity(dim_)).max_abs();
  if (deviation > kCompletenessTol) {
    throw CompletenessError("MeasurementInstrument: completeness defect " +
                            std::to_string(deviation));
  }
}

MeasurementInstrument MeasurementInstrument::from_povm(
    int dim, const std::vector<std::pair<int, ComplexMatrix>>& elements) {
  std::vector<std::pair<int, ComplexMatrix>> kraus;
  kraus.reserve(elements.size());
  for (const auto& [label, pi] : elements) kraus.emplace_back(label, psd_sqrt(pi));
  return MeasurementInstrument(dim, std::move(kraus));
}

MeasurementInstrument MeasurementInstrument::projective(
    const std::vector<std::pair<int, PureState>>& basis) {
  if (basis.empty()) throw CompletenessError("projective: empty basis");
  const int dim = basis.front().second.dim();
  std::vector<std::pair<int, ComplexMatrix>> kraus;
  kraus.reserve(basis.size());
  for (const auto& [label, e] : basis) kraus.emplace_back(label, rank_one(e, e));
  return MeasurementInstrument(dim, std::move(kraus));
}

ComplexMatrix MeasurementInstrument::povm_element(int label) const {
  for (const auto& [k, m] : kraus_) {
    if (k == label) return m.adjoint() * m;
  }
  throw ConfigError("povm_element: unknown outcome label " + std::to_string(label));
}

std::vector<int> MeasurementInstrument::labels() const {
  std::vector<int> out;
  out.reserve(kraus_.size());
  for (const auto& [k, m] : kraus_) out.push_back(k);
  return out;
}

EstimationRule EstimationRule::quantum(std::map<int, PureState> estimates) {
  EstimationRule r;
  r.kind = RuleKind::QuantumEstimate;
  r.quantum_map = std::move(estimates);
  return r;
}

EstimationRule EstimationRule::classical(std::map<int, int> decode) {
  EstimationRule r;
  r.kind = RuleKind::ClassicalDecode;
  r.classical_map = std::move(decode);
  return r;
}

RepeatingDevice::RepeatingDevice(MeasurementInstrument instrument_in, EstimationRule rule_in)
    : instrument(std::move(instrument_in)), rule(std::move(rule_in)) {
  for (int label : instrument.labels()) {
    if (rule.kind == RuleKind::QuantumEstimate) {
      auto it = rule.quantum_map.find(label);
      if (it == rule.quantum_map.end()) {
        throw RuleKindError("RepeatingDevice: outcome " + std::to_string(label) +
                            " has no quantum estimate");
      }
      if (it->second.dim() != instrument.dim()) {
        throw DimensionError("RepeatingDevice: estimate dimension mismatch for outcome " +
                             std::to_string(label));
      }
    } else {
      if (rule.classical_map.find(label) == rule.classical_map.end()) {
        throw RuleKindError("RepeatingDevice: outcome " + std::to_string(label) +
                            " has no decode entry");
      }
    }
  }
  const std::size_t expected = instrument.kraus().size();
  const std::size_t actual = rule.kind == RuleKind::QuantumEstimate ? rule.quantum_map.size()
                                                                    : rule.classical_map.size();
  if (actual != expected) {
    throw RuleKindError("RepeatingDevice: rule covers labels the instrument does not have");
  }
}

Alphabet Alphabet::haar(int dim) {
  if (dim < 2) throw DimensionError("Alphabet::haar: dimension must be at least 2");
  Alphabet a;
  a.kind = Kind::HaarUniform;
  a.dim = dim;
  return a;
}

Alphabet Alphabet::discrete(std::vector<std::pair<PureState, double>> members) {
  if (members.empty()) throw ConfigError("Alphabet::discrete: no members");
  Alphabet a;
  a.kind = Kind::Discrete;
  a.dim = members.front().first.dim();
  double total = 0.0;
  for (const auto& [state, p] : members) {
    if (state.dim() != a.dim) throw DimensionError("Alphabet::discrete: mixed dimensions");
    if (p < 0.0) throw ConfigError("Alphabet::discrete: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kProbabilitySumTol) {
    throw ConfigError("Alphabet::discrete: probabilities sum to " + std::to_string(total));
  }
  a.members = std::move(members);
  return a;
}

ClassicalEncoding::ClassicalEncoding(
    std::vector<std::vector<std::pair<PureState, double>>> table_in, std::vector<double> prior_in)
    : table(std::move(table_in)), prior(std::move(prior_in)) {
  if (table.size() < 2) throw EncodingError("ClassicalEncoding: need at least two symbols");
  if (prior.size() != table.size()) {
    throw EncodingError("ClassicalEncoding: prior length does not match symbol count");
  }
  double prior_sum = 0.0;
  for (double p : prior) {
    if (p < 0.0) throw EncodingError("ClassicalEncoding: negative prior");
    prior_sum += p;
  }
  if (std::abs(prior_sum - 1.0) > kProbabilitySumTol) {
    throw EncodingError("ClassicalEncoding: prior sums to " + std::to_string(prior_sum));
  }
  const int d = dim();
  for (const auto& row : table) {
    if (row.empty()) throw EncodingError("ClassicalEncoding: symbol with no carrier states");
    double row_sum = 0.0;
    for (const auto& [state, p] : row) {
      if (state.dim() != d) throw DimensionError("ClassicalEncoding: mixed state dimensions");
      if (p < 0.0) throw EncodingError("ClassicalEncoding: negative conditional probability");
      row_sum += p;
    }
    if (std::abs(row_sum - 1.0) > kProbabilitySumTol) {
      throw EncodingError("ClassicalEncoding: conditional probabilities sum to " +
                          std::to_string(row_sum));
    }
  }
}

int ClassicalEncoding::dim() const { return table.front().front().first.dim(); }

std::vector<OutcomeBranch> apply_instrument(const MeasurementInstrument& instr,
                                            const PureState& psi) {
  if (psi.dim() != instr.dim()) {
    throw DimensionError("apply_instrument: state dimension " + std::to_string(psi.dim()) +
                         " vs instrument dimension " + std::to_string(instr.dim()));
  }
  std::vector<OutcomeBranch> out;
  out.reserve(instr.kraus().size());
  for (const auto& [label, m] : instr.kraus()) {
    std::vector<Complex> y = apply(m, psi.amplitudes());
    const double p = squared_norm(y);
    if (p <= kNullBranchTol) continue;
    const double inv = 1.0 / std::sqrt(p);
    for (Complex& c : y) c *= inv;
    out.push_back(OutcomeBranch{label, p, PureState::normalized(std::move(y))});
  }
  return out;
}

double transmission_fidelity_pointwise(const RepeatingDevice& dev, const PureState& psi) {
  if (psi.dim() != dev.instrument.dim()) {
    throw DimensionError("transmission_fidelity_pointwise: dimension mismatch");
  }
  // sum_k p_k |<psi|psi_k>|^2 = sum_k |<psi|M_k|psi>|^2
  double f = 0.0;
  for (const auto& [label, m] : dev.instrument.kraus()) f += std::norm(expectation(m, psi));
  return f;
}

double estimation_fidelity_pointwise(const RepeatingDevice& dev, const PureState& psi) {
  check_rule_kind(dev, RuleKind::QuantumEstimate, "estimation_fidelity_pointwise");
  if (psi.dim() != dev.instrument.dim()) {
    throw DimensionError("estimation_fidelity_pointwise: dimension mismatch");
  }
  double g = 0.0;
  for (const auto& [label, m] : dev.instrument.kraus()) {
    const double p = squared_norm(apply(m, psi.amplitudes()));
    const PureState& phi = dev.rule.quantum_map.at(label);
    g += p * std::norm(inner(psi, phi));
  }
  return g;
}

TradeoffPoint average_fidelities_mc(const RepeatingDevice& dev, const Alphabet& alphabet,
                                    long long samples, const RngStream& rng, int workers) {
  check_rule_kind(dev, RuleKind::QuantumEstimate, "average_fidelities_mc");
  if (alphabet.dim != dev.instrument.dim()) {
    throw DimensionError("average_fidelities_mc: alphabet dimension mismatch");
  }

  TradeoffPoint point;
  point.dim = dev.instrument.dim();
  point.kind = RuleKind::QuantumEstimate;

  if (alphabet.kind == Alphabet::Kind::Discrete) {
    double f = 0.0, g = 0.0;
    for (const auto& [state, p] : alphabet.members) {
      f += p * transmission_fidelity_pointwise(dev, state);
      g += p * estimation_fidelity_pointwise(dev, state);
    }
    point.f = f;
    point.g = g;
    return point;
  }

  if (samples < 1) throw ConfigError("average_fidelities_mc: need at least one sample");
  if (workers < 1) throw ConfigError("average_fidelities_mc: need at least one worker");
  workers = static_cast<int>(std::min<long long>(workers, samples));

  std::vector<McAccumulator> partial(static_cast<std::size_t>(workers));
  auto run_worker = [&](int w) {
    const long long base = samples / workers;
    const long long extra = w < static_cast<int>(samples % workers) ? 1 : 0;
    const long long n = base + extra;
    RngStream stream = rng.derived(rng.stream() + static_cast<std::uint64_t>(w));
    McAccumulator& acc = partial[static_cast<std::size_t>(w)];
    for (long long i = 0; i < n; ++i) {
      const PureState psi = haar_sample(alphabet.dim, stream);
      acc.add(transmission_fidelity_pointwise(dev, psi),
              estimation_fidelity_pointwise(dev, psi));
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& t : pool) t.join();
  }

  // Combine in worker order so the result is independent of scheduling.
  McAccumulator total;
  for (const McAccumulator& acc : partial) {
    total.sum_f += acc.sum_f;
    total.sum_f2 += acc.sum_f2;
    total.sum_g += acc.sum_g;
    total.sum_g2 += acc.sum_g2;
    total.count += acc.count;
  }

  const double n = static_cast<double>(total.count);
  point.f = total.sum_f / n;
  point.g = total.sum_g / n;
  McStats mc;
  mc.samples = total.count;
  mc.workers = workers;
  if (total.count > 1) {
    const double var_f = std::max(0.0, (total.sum_f2 - n * point.f * point.f) / (n - 1.0));
    const double var_g = std::max(0.0, (total.sum_g2 - n * point.g * point.g) / (n - 1.0));
    mc.se_f = std::sqrt(var_f / n);
    mc.se_g = std::sqrt(var_g / n);
  }
  point.mc = mc;
  return point;
}

TradeoffPoint average_fidelities_exact(const RepeatingDevice& dev) {
  check_rule_kind(dev, RuleKind::QuantumEstimate, "average_fidelities_exact");
  const int d = dev.instrument.dim();
  const double denom = static_cast<double>(d) * (d + 1);
  double sum_f = 0.0;
  double sum_g = 0.0;
  for (const auto& [label, m] : dev.instrument.kraus()) {
    const ComplexMatrix pi = m.adjoint() * m;
    sum_f += std::norm(m.trace()) + pi.trace().real();
    const PureState& phi = dev.rule.quantum_map.at(label);
    sum_g += pi.trace().real() + expectation(pi, phi).real();
  }
  TradeoffPoint point;
  point.f = sum_f / denom;
  point.g = sum_g / denom;
  point.dim = d;
  point.kind = RuleKind::QuantumEstimate;
  return point;
}

TradeoffPoint classical_estimation_fidelity(const RepeatingDevice& dev,
                                            const ClassicalEncoding& enc) {
  check_rule_kind(dev, RuleKind::ClassicalDecode, "classical_estimation_fidelity");
  if (enc.dim() != dev.instrument.dim()) {
    throw DimensionError("classical_estimation_fidelity: encoding dimension mismatch");
  }
  const int m = enc.num_symbols();
  for (const auto& [label, target] : dev.rule.classical_map) {
    if (target != kUnidentified && (target < 0 || target >= m)) {
      throw EncodingError("classical_estimation_fidelity: outcome " + std::to_string(label) +
                          " decodes to symbol " + std::to_string(target) + " outside 0.." +
                          std::to_string(m - 1));
    }
  }

  double f = 0.0;
  double g = 0.0;
  for (int b = 0; b < m; ++b) {
    for (const auto& [state, cond] : enc.table[static_cast<std::size_t>(b)]) {
      const double weight = enc.prior[static_cast<std::size_t>(b)] * cond;
      if (weight == 0.0) continue;
      double correct = 0.0;
      for (const auto& [label, kraus] : dev.instrument.kraus()) {
        const double p = squared_norm(apply(kraus, state.amplitudes()));
        const int target = dev.rule.classical_map.at(label);
        if (target == b) {
          correct += p;
        } else if (target == kUnidentified) {
          correct += p / static_cast<double>(m);
        }
      }
      g += weight * correct;
      f += weight * transmission_fidelity_pointwise(dev, state);
    }
  }

  TradeoffPoint point;
  point.f = f;
  point.g = g;
  point.dim = dev.instrument.dim();
  point.kind = RuleKind::ClassicalDecode;
  return point;
}

RepeatingDevice builtin_device(BuiltinDevice which, const DeviceParams& params) {
  const int d = params.dim;
  switch (which) {
    case BuiltinDevice::DoNothing: {
      if (d < 2) throw ConfigError("do_nothing: dimension must be at least 2");
      if (params.guess < 0 || params.guess >= d) throw ConfigError("do_nothing: guess out of range");
      MeasurementInstrument instr(d, {{0, ComplexMatrix::identity(d)}});
      return RepeatingDevice(std::move(instr),
                             EstimationRule::quantum({{0, PureState::basis(d, params.guess)}}));
    }
    case BuiltinDevice::MeasureReprepare: {
      if (d < 2) throw ConfigError("measure_reprepare: dimension must be at least 2");
      std::vector<std::pair<int, PureState>> basis;
      std::map<int, PureState> estimates;
      for (int k = 0; k < d; ++k) {
        basis.emplace_back(k, PureState::basis(d, k));
        estimates.emplace(k, PureState::basis(d, k));
      }
      return RepeatingDevice(MeasurementInstrument::projective(basis),
                             EstimationRule::quantum(std::move(estimates)));
    }
    case BuiltinDevice::Breidbart: {
      const double c = std::cos(M_PI / 8.0);
      const double s = std::sin(M_PI / 8.0);
      const PureState b0({Complex(c, 0.0), Complex(s, 0.0)});
      const PureState b1({Complex(std::cos(5.0 * M_PI / 8.0), 0.0),
                          Complex(std::sin(5.0 * M_PI / 8.0), 0.0)});
      return RepeatingDevice(MeasurementInstrument::projective({{0, b0}, {1, b1}}),
                             EstimationRule::classical({{0, 0}, {1, 1}}));
    }
    case BuiltinDevice::WeakFamily: {
      const double lambda = params.lambda;
      if (lambda < 0.0 || lambda > 0.5) {
        throw ConfigError("weak_family: lambda must lie in [0, 1/2]");
      }
      ComplexMatrix m0(2, 2);
      m0.at(0, 0) = std::sqrt(0.5 + lambda);
      m0.at(1, 1) = std::sqrt(0.5 - lambda);
      ComplexMatrix m1(2, 2);
      m1.at(0, 0) = std::sqrt(0.5 - lambda);
      m1.at(1, 1) = std::sqrt(0.5 + lambda);
      MeasurementInstrument instr(2, {{0, std::move(m0)}, {1, std::move(m1)}});
      return RepeatingDevice(std::move(instr),
                             EstimationRule::quantum({{0, PureState::basis(2, 0)},
                                                      {1, PureState::basis(2, 1)}}));
    }
    case BuiltinDevice::BasisDecode: {
      if (d < 2) throw ConfigError("basis_decode: dimension must be at least 2");
      std::vector<std::pair<int, PureState>> basis;
      std::map<int, int> decode;
      for (int k = 0; k < d; ++k) {
        basis.emplace_back(k, PureState::basis(d, k));
        decode.emplace(k, k);
      }
      return RepeatingDevice(MeasurementInstrument::projective(basis),
                             EstimationRule::classical(std::move(decode)));
    }
  }
  throw ConfigError("builtin_device: unknown device");
}

ClassicalEncoding builtin_encoding(BuiltinEncoding which) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (which) {
    case BuiltinEncoding::Bb84: {
      const PureState zero = PureState::basis(2, 0);
      const PureState one = PureState::basis(2, 1);
      const PureState plus({Complex(r, 0.0), Complex(r, 0.0)});
      const PureState minus({Complex(r, 0.0), Complex(-r, 0.0)});
      return ClassicalEncoding({{{zero, 0.5}, {plus, 0.5}}, {{one, 0.5}, {minus, 0.5}}},
                               {0.5, 0.5});
    }
    case BuiltinEncoding::Simplified: {
      const double a = std::sqrt(3.0) / 2.0;
      const double b = 0.5;
      const PureState s0p({Complex(a, 0.0), Complex(b, 0.0)});
      const PureState s0m({Complex(a, 0.0), Complex(-b, 0.0)});
      const PureState s1p({Complex(b, 0.0), Complex(a, 0.0)});
      const PureState s1m({Complex(b, 0.0), Complex(-a, 0.0)});
      return ClassicalEncoding({{{s0p, 0.5}, {s0m, 0.5}}, {{s1p, 0.5}, {s1m, 0.5}}}, {0.5, 0.5});
    }
    case BuiltinEncoding::Orthogonal: {
      return ClassicalEncoding({{{PureState::basis(2, 0), 1.0}}, {{PureState::basis(2, 1), 1.0}}},
                               {0.5, 0.5});
    }
  }
  throw ConfigError("builtin_encoding: unknown encoding");
}

RepeatingDevice random_quantum_device(int dim, int outcomes, RngStream& rng) {
  if (dim < 2) throw DimensionError("random_quantum_device: dimension must be at least 2");
  if (outcomes < 1) throw ConfigError("random_quantum_device: need at least one outcome");
  std::vector<ComplexMatrix> candidates;
  candidates.reserve(static_cast<std::size_t>(outcomes));
  ComplexMatrix sum(dim, dim);
  for (int k = 0; k < outcomes; ++k) {
    ComplexMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) a.at(i, j) = Complex(rng.gaussian(), rng.gaussian());
    }
    sum = sum + a.adjoint() * a;
    candidates.push_back(std::move(a));
  }
  const ComplexMatrix whiten = inverse_sqrt(sum);
  std::vector<std::pair<int, ComplexMatrix>> kraus;
  std::map<int, PureState> estimates;
  for (int k = 0; k < outcomes; ++k) {
    kraus.emplace_back(k, candidates[static_cast<std::size_t>(k)] * whiten);
    estimates.emplace(k, haar_sample(dim, rng));
  }
  return RepeatingDevice(MeasurementInstrument(dim, std::move(kraus)),
                         EstimationRule::quantum(std::move(estimates)));
}

}  // namespace qseal
