#include "doctest.h"

#include <cmath>
#include <vector>

#include "qseal/core.hpp"

using namespace qseal;

namespace {

ComplexMatrix random_hermitian(int d, RngStream& rng) {
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    m.at(i, i) = rng.gaussian();
    for (int j = i + 1; j < d; ++j) {
      m.at(i, j) = Complex(rng.gaussian(), rng.gaussian());
      m.at(j, i) = std::conj(m.at(i, j));
    }
  }
  return m;
}

ComplexMatrix random_psd(int d, RngStream& rng) {
  ComplexMatrix a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a.at(i, j) = Complex(rng.gaussian(), rng.gaussian());
  }
  return a.adjoint() * a;
}

}  // namespace

TEST_CASE("adjoint conjugate-transposes") {
  CHECK((ComplexMatrix::identity(2).adjoint() - ComplexMatrix::identity(2)).max_abs() == 0.0);

  const ComplexMatrix ladder = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  const ComplexMatrix expected = ComplexMatrix::from_rows({{0.0, 0.0}, {1.0, 0.0}});
  CHECK((ladder.adjoint() - expected).max_abs() == 0.0);

  const ComplexMatrix imag = ComplexMatrix::from_rows({{Complex(0.0, 1.0), 0.0}, {0.0, 0.0}});
  CHECK(imag.adjoint().at(0, 0) == Complex(0.0, -1.0));
}

TEST_CASE("apply is the matrix-vector product") {
  const std::vector<Complex> e0{1.0, 0.0};
  CHECK(apply(ComplexMatrix::identity(2), e0) == e0);

  const ComplexMatrix flip = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(apply(flip, e0) == std::vector<Complex>{0.0, 1.0});

  const ComplexMatrix diag = ComplexMatrix::from_rows({{2.0, 0.0}, {0.0, 3.0}});
  CHECK(apply(diag, {1.0, 1.0}) == std::vector<Complex>{2.0, 3.0});

  CHECK_THROWS_AS(apply(diag, {1.0, 1.0, 1.0}), DimensionError);
}

TEST_CASE("inner products of basis and superposition states") {
  const PureState zero = PureState::basis(2, 0);
  const PureState one = PureState::basis(2, 1);
  const double r = 1.0 / std::sqrt(2.0);
  const PureState plus({Complex(r, 0.0), Complex(r, 0.0)});

  CHECK(inner(zero, zero) == Complex(1.0, 0.0));
  CHECK(inner(zero, one) == Complex(0.0, 0.0));
  CHECK(std::abs(inner(zero, plus).real() - 0.70711) < 1e-5);

  CHECK_THROWS_AS(inner(zero, PureState::basis(3, 0)), DimensionError);
}

TEST_CASE("inner is conjugate-symmetric for random states") {
  RngStream rng(7, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 5);
    const PureState a = haar_sample(d, rng);
    const PureState b = haar_sample(d, rng);
    CHECK(std::abs(inner(a, b) - std::conj(inner(b, a))) < 1e-14);
    CHECK(std::abs(inner(a, b)) <= 1.0 + 1e-10);
  }
}

TEST_CASE("pure states must be normalized") {
  CHECK_THROWS_AS(PureState({1.0, 1.0}), NormalizationError);
  CHECK_THROWS_AS(PureState({1.0}), DimensionError);
  const PureState renorm = PureState::normalized({2.0, 0.0});
  CHECK(renorm.amp(0) == Complex(1.0, 0.0));
  CHECK_THROWS_AS(PureState::normalized({0.0, 0.0}), NormalizationError);
}

TEST_CASE("dimensions are capped by configuration") {
  CHECK(max_dimension() == 64);
  CHECK_THROWS_AS(ComplexMatrix(65, 65), DimensionError);
  CHECK_THROWS_AS(PureState::basis(65, 0), DimensionError);
  CHECK_NOTHROW(ComplexMatrix::identity(64));
}

TEST_CASE("rng streams are reproducible and independent") {
  RngStream a(42, 0);
  RngStream b(42, 0);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  RngStream c(42, 1);
  bool differs = false;
  RngStream a2(42, 0);
  for (int i = 0; i < 10; ++i) differs |= (a2.next_u64() != c.next_u64());
  CHECK(differs);
}

TEST_CASE("haar samples are deterministic per (seed, stream)") {
  RngStream a(42, 0);
  RngStream b(42, 0);
  const PureState sa = haar_sample(4, a);
  const PureState sb = haar_sample(4, b);
  for (int i = 0; i < 4; ++i) CHECK(sa.amp(i) == sb.amp(i));

  RngStream bad(1, 0);
  CHECK_THROWS_AS(haar_sample(1, bad), DimensionError);
}

// Oracle: analytic Haar moments int |<0|psi>|^2 = 1/d and
// int |<0|psi>|^4 = 2/(d(d+1)).
TEST_CASE("haar moments match the analytic values") {
  const int n = 100000;
  for (int d : {2, 3}) {
    RngStream rng(123, 0);
    const PureState zero = PureState::basis(d, 0);
    double m1 = 0.0, m2 = 0.0, v1 = 0.0, v2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double p = std::norm(inner(zero, haar_sample(d, rng)));
      m1 += p;
      m2 += p * p;
      v1 += p * p;
      v2 += p * p * p * p;
    }
    m1 /= n;
    m2 /= n;
    const double se1 = std::sqrt((v1 / n - m1 * m1) / n);
    const double se2 = std::sqrt((v2 / n - m2 * m2) / n);
    const double expect1 = 1.0 / d;
    const double expect2 = 2.0 / (d * (d + 1.0));
    CHECK(std::abs(m1 - expect1) <= std::max(4.0 * se1, 1e-12));
    CHECK(std::abs(m2 - expect2) <= std::max(4.0 * se2, 1e-12));
    if (d == 2) {
      CHECK(std::abs(m1 - 0.5) < 0.005);
      CHECK(std::abs(m2 - 1.0 / 3.0) < 0.005);
    }
  }
}

TEST_CASE("hermitian eigensystem reconstructs the matrix") {
  RngStream rng(99, 0);
  for (int d : {2, 3, 5, 8}) {
    const ComplexMatrix m = random_hermitian(d, rng);
    const EigenSystem es = hermitian_eigensystem(m);
    ComplexMatrix recon(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        Complex acc(0.0, 0.0);
        for (int k = 0; k < d; ++k) {
          acc += es.vectors.at(i, k) * es.values[k] * std::conj(es.vectors.at(j, k));
        }
        recon.at(i, j) = acc;
      }
    }
    CHECK((recon - m).max_abs() < 1e-12 * std::max(1.0, m.max_abs()));
    for (std::size_t k = 1; k < es.values.size(); ++k) CHECK(es.values[k - 1] <= es.values[k]);
  }
}

TEST_CASE("psd_sqrt on closed-form cases") {
  CHECK((psd_sqrt(ComplexMatrix::identity(2)) - ComplexMatrix::identity(2)).max_abs() < 1e-12);

  const ComplexMatrix diag = ComplexMatrix::from_rows({{4.0, 0.0}, {0.0, 9.0}});
  const ComplexMatrix root = psd_sqrt(diag);
  CHECK(std::abs(root.at(0, 0) - Complex(2.0, 0.0)) < 1e-12);
  CHECK(std::abs(root.at(1, 1) - Complex(3.0, 0.0)) < 1e-12);

  const ComplexMatrix proj = ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}});
  CHECK((psd_sqrt(proj) - proj).max_abs() < 1e-12);
}

TEST_CASE("psd_sqrt squares back to the input for random psd matrices") {
  RngStream rng(5, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 7);
    const ComplexMatrix m = random_psd(d, rng);
    const ComplexMatrix r = psd_sqrt(m);
    CHECK(r.is_hermitian(1e-12));
    CHECK((r * r - m).max_abs() < 1e-10 * std::max(1.0, m.max_abs()));
  }
}

TEST_CASE("psd_sqrt rejects bad inputs") {
  const ComplexMatrix nonherm = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  CHECK_THROWS_AS(psd_sqrt(nonherm), NotPsdError);

  const ComplexMatrix negative = ComplexMatrix::from_rows({{-1.0, 0.0}, {0.0, 1.0}});
  CHECK_THROWS_AS(psd_sqrt(negative), NotPsdError);

  // Tiny negative eigenvalues are clamped instead.
  const ComplexMatrix borderline = ComplexMatrix::from_rows({{-1e-12, 0.0}, {0.0, 1.0}});
  const ComplexMatrix r = psd_sqrt(borderline);
  CHECK(r.at(0, 0).real() == 0.0);
}
