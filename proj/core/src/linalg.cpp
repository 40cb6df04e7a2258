#include "mlur/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlur/error.hpp"

namespace mlur {

namespace {

void require_supported_dim(std::size_t dim) {
  if (dim != 2 && dim != 4) {
    throw InputError("matrix dimension must be 2 or 4, got " + std::to_string(dim));
  }
}

constexpr double kJacobiOffDiagonalTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& h) {
  double sum = 0.0;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = 0; j < h.dim(); ++j) {
      if (i != j) sum += std::norm(h(i, j));
    }
  }
  return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix& h) {
  double sum = 0.0;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = 0; j < h.dim(); ++j) sum += std::norm(h(i, j));
  }
  return std::sqrt(sum);
}

// Zeroes h(p,q) with the unitary J = diag(phase, 1) * R(theta) acting on
// coordinates p and q, where phase = h(p,q)/|h(p,q)| removes the complex
// phase and R is the real symmetric Jacobi rotation. Updates h <- J^H h J.
void jacobi_rotate(ComplexMatrix& h, std::size_t p, std::size_t q) {
  const Complex g = h(p, q);
  const double magnitude = std::abs(g);
  if (magnitude == 0.0) return;

  const double app = h(p, p).real();
  const double aqq = h(q, q).real();
  const double zeta = (aqq - app) / (2.0 * magnitude);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex phase = g / magnitude;

  const std::size_t n = h.dim();
  // h <- h J (columns p, q)
  for (std::size_t k = 0; k < n; ++k) {
    const Complex hkp = h(k, p);
    const Complex hkq = h(k, q);
    h(k, p) = hkp * phase * c - hkq * s;
    h(k, q) = hkp * phase * s + hkq * c;
  }
  // h <- J^H h (rows p, q)
  const Complex phase_conj = std::conj(phase);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex hpk = h(p, k);
    const Complex hqk = h(q, k);
    h(p, k) = phase_conj * c * hpk - s * hqk;
    h(q, k) = phase_conj * s * hpk + c * hqk;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = h(p, p).real();
  h(q, q) = h(q, q).real();
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { require_supported_dim(dim); }

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  require_supported_dim(dim_);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw InputError("ragged matrix rows");
    std::size_t c = 0;
    for (const Complex& v : row) (*this)(r, c++) = v;
    ++r;
  }
  if (!is_finite()) throw InputError("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> entries) {
  ComplexMatrix m(entries.size());
  std::size_t i = 0;
  for (const Complex& v : entries) {
    m(i, i) = v;
    ++i;
  }
  if (!m.is_finite()) throw InputError("matrix entries must be finite");
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

bool ComplexMatrix::is_finite() const {
  return std::all_of(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(dim_ * dim_),
                     [](const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_finite()) return false;
  return max_abs_diff(adjoint()) <= tol;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_dim(other);
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_ * dim_; ++i) worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(rhs);
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(rhs);
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  lhs.require_same_dim(rhs);
  const std::size_t n = lhs.dim_;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex lik = lhs(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
    }
  }
  return out;
}

void ComplexMatrix::require_same_dim(const ComplexMatrix& other) const {
  if (dim_ != other.dim_) {
    throw InputError("dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(other.dim_));
  }
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) throw InputError("tensor_product expects two 2x2 factors");
  ComplexMatrix out(4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose_second(const ComplexMatrix& m) {
  if (m.dim() != 4) throw InputError("partial_transpose_second expects a 4x4 matrix");
  ComplexMatrix out(4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + j, 2 * k + l) = m(2 * i + l, 2 * k + j);
      }
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  if (!h.is_hermitian(kHermitianTol)) throw InputError("hermitian_eigenvalues: input is not Hermitian");

  // Symmetrize so rotations start from an exactly Hermitian matrix.
  ComplexMatrix work = (h + h.adjoint()) * Complex{0.5};
  const std::size_t n = work.dim();
  const double threshold = kJacobiOffDiagonalTol * std::max(1.0, frobenius_norm(work));

  bool converged = false;
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(work) < threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(work, p, q);
    }
  }
  if (!converged && off_diagonal_norm(work) >= threshold) {
    throw InternalError("hermitian_eigenvalues: Jacobi sweeps did not converge");
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = work(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace mlur
