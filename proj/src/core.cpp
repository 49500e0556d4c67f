#include "qseal/core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

namespace qseal {

namespace {

std::atomic<int> g_max_dimension{64};

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void check_dim(int d, const char* what) {
  if (d < 1 || d > max_dimension()) {
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(d) +
                         " outside [1, " + std::to_string(max_dimension()) + "]");
  }
}

}  // namespace

int max_dimension() { return g_max_dimension.load(); }

void set_max_dimension(int d) {
  if (d < 2) throw ConfigError("max dimension must be at least 2");
  g_max_dimension.store(d);
}

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  check_dim(rows, "ComplexMatrix rows");
  check_dim(cols, "ComplexMatrix cols");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const int r = static_cast<int>(rows.size());
  if (r == 0) throw DimensionError("from_rows: empty matrix");
  const int c = static_cast<int>(rows.begin()->size());
  ComplexMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw DimensionError("from_rows: ragged rows");
    }
    int j = 0;
    for (const Complex& v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = std::conj(at(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw DimensionError("matrix product: " + std::to_string(cols_) + " vs " +
                         std::to_string(rhs.rows_));
  }
  ComplexMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Complex a = at(i, k);
      if (a == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum: shape mismatch");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionError("matrix difference: shape mismatch");
  }
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
  ComplexMatrix out = *this;
  for (auto& e : out.entries_) e *= factor;
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  Complex t(0.0, 0.0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

bool ComplexMatrix::is_finite() const {
  for (const Complex& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  }
  return true;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i; j < cols_; ++j) {
      if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
    }
  }
  return true;
}

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

std::vector<Complex> apply(const ComplexMatrix& m, const std::vector<Complex>& v) {
  if (m.cols() != static_cast<int>(v.size())) {
    throw DimensionError("apply: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " but vector has length " +
                         std::to_string(v.size()));
  }
  std::vector<Complex> out(static_cast<std::size_t>(m.rows()), Complex(0.0, 0.0));
  for (int i = 0; i < m.rows(); ++i) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  const int d = static_cast<int>(amplitudes_.size());
  if (d < 2) throw DimensionError("PureState: dimension must be at least 2");
  check_dim(d, "PureState");
  double norm2 = 0.0;
  for (const Complex& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw NormalizationError("PureState: non-finite amplitude");
    }
    norm2 += std::norm(a);
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > kStructuralTol) {
    throw NormalizationError("PureState: norm " + std::to_string(std::sqrt(norm2)) +
                             " is not 1 within tolerance");
  }
}

PureState PureState::basis(int dim, int index) {
  if (index < 0 || index >= dim) throw DimensionError("basis: index out of range");
  std::vector<Complex> amps(static_cast<std::size_t>(dim), Complex(0.0, 0.0));
  amps[static_cast<std::size_t>(index)] = 1.0;
  return PureState(std::move(amps));
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  double norm2 = 0.0;
  for (const Complex& a : amplitudes) norm2 += std::norm(a);
  const double norm = std::sqrt(norm2);
  if (!(norm > 1e-150)) throw NormalizationError("normalized: null vector");
  for (Complex& a : amplitudes) a /= norm;
  return PureState(std::move(amplitudes));
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("inner: dimensions " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
  Complex acc(0.0, 0.0);
  for (int i = 0; i < a.dim(); ++i) acc += std::conj(a.amp(i)) * b.amp(i);
  return acc;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
  std::uint64_t x = seed;
  (void)splitmix64(x);
  x ^= (stream + 0x9E3779B97F4A7C15ULL) * 0xD1342543DE82EF95ULL;
  (void)splitmix64(x);
  state_ = x;
}

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
  if (has_cached_gaussian_) {
    has_cached_gaussian_ = false;
    return cached_gaussian_;
  }
  // Box-Muller on (0,1] x [0,1) uniforms keeps the sequence platform-stable.
  const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  cached_gaussian_ = r * std::sin(theta);
  has_cached_gaussian_ = true;
  return r * std::cos(theta);
}

PureState haar_sample(int dim, RngStream& rng) {
  if (dim < 2) throw DimensionError("haar_sample: dimension must be at least 2");
  check_dim(dim, "haar_sample");
  std::vector<Complex> amps(static_cast<std::size_t>(dim));
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& a : amps) {
      a = Complex(rng.gaussian(), rng.gaussian());
      norm2 += std::norm(a);
    }
  } while (!(norm2 > 1e-100));
  const double norm = std::sqrt(norm2);
  for (auto& a : amps) a /= norm;
  return PureState(std::move(amps));
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("hermitian_eigensystem: matrix not square");
  if (!m.is_finite()) throw NotPsdError("hermitian_eigensystem: non-finite entries");
  if (!m.is_hermitian()) throw NotPsdError("hermitian_eigensystem: matrix not Hermitian");

  const int n = m.rows();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, m.max_abs());

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += std::norm(a.at(p, q));
    }
    if (std::sqrt(off) <= 1e-15 * scale) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a.at(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        // Phase factor reduces the 2x2 block to a real symmetric rotation.
        const Complex phase = apq / r;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        // A <- J^dag A J, V <- V J; J differs from identity on columns p, q.
        for (int i = 0; i < n; ++i) {
          const Complex aip = a.at(i, p);
          const Complex aiq = a.at(i, q);
          a.at(i, p) = c * aip + jqp * aiq;
          a.at(i, q) = s * aip + jqq * aiq;
        }
        for (int j = 0; j < n; ++j) {
          const Complex apj = a.at(p, j);
          const Complex aqj = a.at(q, j);
          a.at(p, j) = c * apj + std::conj(jqp) * aqj;
          a.at(q, j) = s * apj + std::conj(jqq) * aqj;
        }
        for (int i = 0; i < n; ++i) {
          const Complex vip = v.at(i, p);
          const Complex viq = v.at(i, q);
          v.at(i, p) = c * vip + jqp * viq;
          v.at(i, q) = s * vip + jqq * viq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&a](int x, int y) { return a.at(x, x).real() < a.at(y, y).real(); });

  EigenSystem out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[static_cast<std::size_t>(k)] = a.at(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.vectors.at(i, k) = v.at(i, order[k]);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("psd_sqrt: matrix not square");
  if (!m.is_hermitian()) throw NotPsdError("psd_sqrt: matrix not Hermitian");
  EigenSystem es = hermitian_eigensystem(m);
  const int n = m.rows();
  const double floor = -kStructuralTol * std::max(1.0, m.max_abs());
  for (double& lambda : es.values) {
    if (lambda < floor) {
      throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(lambda) + " below tolerance");
    }
    lambda = std::sqrt(std::max(lambda, 0.0));
  }
  ComplexMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < n; ++k) {
        acc += es.vectors.at(i, k) * es.values[static_cast<std::size_t>(k)] *
               std::conj(es.vectors.at(j, k));
      }
      out.at(i, j) = acc;
      out.at(j, i) = std::conj(acc);
    }
    out.at(i, i) = Complex(out.at(i, i).real(), 0.0);
  }
  return out;
}

}  // namespace qseal
