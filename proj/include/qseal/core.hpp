#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "qseal/errors.hpp"

namespace qseal {

using Complex = std::complex<double>;

// Default tolerance for structural invariants (norms, hermiticity, ...).
inline constexpr double kStructuralTol = 1e-10;

// Outcome probabilities at or below this are treated as null branches.
inline constexpr double kNullBranchTol = 1e-14;

// Runtime-configurable cap on Hilbert-space dimensions. Everything the
// library models fits in d <= 8; the cap guards against pathological configs.
int max_dimension();
void set_max_dimension(int d);

// Dense complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  static ComplexMatrix identity(int n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Complex& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix scaled(Complex factor) const;

  Complex trace() const;
  double max_abs() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_finite() const;
  bool is_hermitian(double tol = kStructuralTol) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix adjoint(const ComplexMatrix& m);
std::vector<Complex> apply(const ComplexMatrix& m, const std::vector<Complex>& v);

// Unit-norm state vector, d >= 2.
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes);
  static PureState basis(int dim, int index);
  // Rescales the given vector to unit norm (errors on a null vector).
  static PureState normalized(std::vector<Complex> amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Complex& amp(int i) const { return amplitudes_[static_cast<std::size_t>(i)]; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

 private:
  std::vector<Complex> amplitudes_;
};

Complex inner(const PureState& a, const PureState& b);

// Deterministic random stream: identical (seed, stream) always reproduces the
// same sample sequence. Workers must each own a distinct stream index.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  RngStream derived(std::uint64_t stream) const { return RngStream(seed_, stream); }

  std::uint64_t next_u64();
  double uniform();   // [0, 1)
  double gaussian();  // standard normal

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t state_ = 0;
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

// Uniform (Haar) random pure state of dimension d.
PureState haar_sample(int dim, RngStream& rng);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

// Cyclic Jacobi diagonalization of a Hermitian matrix.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

// Hermitian square root of a PSD matrix; eigenvalues in [-1e-10, 0] are
// clamped to zero, anything lower is rejected.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

}  // namespace qseal
