#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace mlur {

using Complex = std::complex<double>;

/// Tolerance for Hermiticity checks (max-norm).
inline constexpr double kHermitianTol = 1e-10;

/// Dense complex matrix of dimension 2 (one qubit) or 4 (two qubits).
///
/// Storage is row-major. Two-qubit matrices use the basis ordering
/// |HH>, |HV>, |VH>, |VV> with |H> = (1,0) and |V> = (0,1), so the first
/// subsystem is the slow index.
class ComplexMatrix {
 public:
  /// Zero matrix. Throws InputError unless dim is 2 or 4.
  explicit ComplexMatrix(std::size_t dim);

  /// Builds from nested rows; the row count fixes the dimension. Throws
  /// InputError on ragged rows, unsupported dimension or non-finite entries.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::initializer_list<Complex> entries);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  bool is_finite() const;
  bool is_hermitian(double tol = kHermitianTol) const;

  /// Largest |a_ij - b_ij|. Throws InputError on dimension mismatch.
  double max_abs_diff(const ComplexMatrix& other) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void require_same_dim(const ComplexMatrix& other) const;

  std::size_t dim_;
  std::array<Complex, 16> data_{};
};

/// Kronecker product of two single-qubit matrices; block (i,j) is a(i,j)*b.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transposes the second subsystem:
/// <i,j| M^PT |k,l> = <i,l| M |k,j>.
ComplexMatrix partial_transpose_second(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix in ascending order, by cyclic Jacobi
/// rotations. Throws InputError if the input is not Hermitian within
/// kHermitianTol, InternalError if the sweeps fail to converge.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

}  // namespace mlur
