#include "doctest.h"

#include <cmath>
#include <tuple>

#include "qseal/seal.hpp"

using namespace qseal;

namespace {

// Independent enumeration oracle for a projective decoder on a trivial owner
// system: alpha and beta from raw overlap arithmetic.
struct Enumerated {
  double alpha = 0.0;
  double beta = 0.0;
};

Enumerated enumerate_projective(
    const std::vector<std::tuple<int, std::vector<Complex>, double>>& entries,
    const std::vector<std::vector<Complex>>& basis, const std::vector<int>& decode) {
  Enumerated out;
  for (const auto& [value, state, weight] : entries) {
    double survival = 0.0;
    double correct = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Complex amp(0.0, 0.0);
      for (std::size_t i = 0; i < state.size(); ++i) amp += std::conj(basis[k][i]) * state[i];
      const double p = std::norm(amp);
      survival += p * p;  // projective: the post state is the basis vector
      if (decode[k] == value) correct += p;
    }
    out.alpha += weight * correct;
    out.beta += weight * (1.0 - survival);
  }
  return out;
}

}  // namespace

TEST_CASE("optimal qbs seal evaluates to alpha 3/4, beta 3/8") {
  const SealProtocol p = builtin_seal(BuiltinSeal::OptimalQbs);
  CHECK(std::abs(readability(p) - 0.75) < 1e-12);
  CHECK(std::abs(detection_probability(p) - 0.375) < 1e-12);
  const SealPoint point = evaluate_seal(p);
  CHECK(std::abs(point.alpha + point.beta - 9.0 / 8.0) < 1e-12);
}

TEST_CASE("perfect seal is read exactly and never detected") {
  const SealProtocol p = builtin_seal(BuiltinSeal::PerfectSeal);
  CHECK(std::abs(readability(p) - 1.0) < 1e-12);
  CHECK(std::abs(detection_probability(p) - 0.0) < 1e-12);

  const std::vector<bool> perfect = classify_perfect(p);
  REQUIRE(perfect.size() == 2);
  CHECK(perfect[0]);
  CHECK(perfect[1]);
}

// Oracle: outcome enumeration over the four encoding states.
TEST_CASE("simplified seal matches its enumeration oracle") {
  const double a = std::sqrt(3.0) / 2.0;
  const Enumerated expect = enumerate_projective(
      {{0, {a, 0.5}, 0.25}, {0, {a, -0.5}, 0.25}, {1, {0.5, a}, 0.25}, {1, {0.5, -a}, 0.25}},
      {{1.0, 0.0}, {0.0, 1.0}}, {0, 1});
  CHECK(std::abs(expect.alpha - 0.75) < 1e-15);
  CHECK(std::abs(expect.beta - 0.375) < 1e-15);

  const SealProtocol p = builtin_seal(BuiltinSeal::SimplifiedSeal);
  CHECK(std::abs(readability(p) - expect.alpha) < 1e-12);
  CHECK(std::abs(detection_probability(p) - expect.beta) < 1e-12);

  const std::vector<bool> perfect = classify_perfect(p);
  REQUIRE(perfect.size() == 4);
  for (bool flag : perfect) CHECK(!flag);
}

TEST_CASE("identity decoders never disturb and guessing reads 1/m") {
  MeasurementInstrument decoder(2, {{0, ComplexMatrix::identity(2)}});
  const SealProtocol p(1, 2, 2,
                       {{0, PureState::basis(2, 0), 0.5}, {1, PureState::basis(2, 1), 0.5}},
                       std::move(decoder), {{0, kUnidentified}});
  CHECK(std::abs(readability(p) - 0.5) < 1e-12);
  CHECK(std::abs(detection_probability(p) - 0.0) < 1e-15);
}

TEST_CASE("seal evaluations stay inside the unit square and the bit-seal caps") {
  for (BuiltinSeal which :
       {BuiltinSeal::OptimalQbs, BuiltinSeal::PerfectSeal, BuiltinSeal::SimplifiedSeal}) {
    const SealPoint point = evaluate_seal(builtin_seal(which));
    CHECK(point.alpha >= -1e-10);
    CHECK(point.alpha <= 1.0 + 1e-10);
    CHECK(point.beta >= -1e-10);
    CHECK(point.beta <= 1.0 + 1e-10);
    // Every single-bit protocol in the catalog respects both caps.
    CHECK(point.beta <= 0.5 + 1e-9);
    CHECK(point.alpha + point.beta <= 9.0 / 8.0 + 1e-9);
  }
  const SealPoint best = evaluate_seal(builtin_seal(BuiltinSeal::OptimalQbs));
  CHECK(std::abs(best.alpha + best.beta - 9.0 / 8.0) < 1e-12);
}

TEST_CASE("bit-swap symmetric protocols are prior-independent") {
  const SealProtocol p = builtin_seal(BuiltinSeal::OptimalQbs);
  const SealPoint uniform = evaluate_seal(p);
  const SealPoint skewed = evaluate_seal(p.with_weights({0.3, 0.7}));
  CHECK(std::abs(uniform.alpha - skewed.alpha) < 1e-15);
  CHECK(std::abs(uniform.beta - skewed.beta) < 1e-15);
}

TEST_CASE("protocol validation rejects structural violations") {
  MeasurementInstrument decoder = MeasurementInstrument::projective(
      {{0, PureState::basis(2, 0)}, {1, PureState::basis(2, 1)}});

  // Weights must sum to one.
  CHECK_THROWS_AS(
      SealProtocol(1, 2, 2, {{0, PureState::basis(2, 0), 0.9}}, decoder, {{0, 0}, {1, 1}}),
      ProtocolError);

  // Joint state dimension must be dim_alice * dim_bob.
  CHECK_THROWS_AS(SealProtocol(2, 2, 2,
                               {{0, PureState::basis(2, 0), 0.5},
                                {1, PureState::basis(2, 1), 0.5}},
                               decoder, {{0, 0}, {1, 1}}),
                  DimensionError);

  // Decode targets must be valid values or Unidentified.
  CHECK_THROWS_AS(SealProtocol(1, 2, 2,
                               {{0, PureState::basis(2, 0), 0.5},
                                {1, PureState::basis(2, 1), 0.5}},
                               decoder, {{0, 0}, {1, 9}}),
                  ProtocolError);
}
