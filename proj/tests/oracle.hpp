#pragma once

// Independent reference computations for tests. Everything here is built
// from Eigen directly and never calls into the library's linear algebra.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

#include "mlur/linalg.hpp"
#include "mlur/quantum.hpp"

namespace oracle {

using C = std::complex<double>;
using M2 = Eigen::Matrix2cd;
using M4 = Eigen::Matrix4cd;
using V4 = Eigen::Vector4cd;

inline M2 sx() { M2 m; m << 0, 1, 1, 0; return m; }
inline M2 sy() { M2 m; m << 0, C(0, -1), C(0, 1), 0; return m; }
inline M2 sz() { M2 m; m << 1, 0, 0, -1; return m; }
inline M2 id2() { return M2::Identity(); }

inline M4 kron(const M2& a, const M2& b) {
  M4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

inline Eigen::MatrixXcd to_eigen(const mlur::ComplexMatrix& m) {
  const int n = static_cast<int>(m.dim());
  Eigen::MatrixXcd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m(i, j);
  return out;
}

inline M4 projector(const V4& v) { return v * v.adjoint(); }

inline V4 ket(double a, double b, double c, double d) { V4 v; v << a, b, c, d; return v; }

// |H,V> - |V,H> etc. in HH,HV,VH,VV order.
inline V4 psi_minus() { return ket(0, 1, -1, 0) / std::sqrt(2.0); }
inline V4 psi_plus() { return ket(0, 1, 1, 0) / std::sqrt(2.0); }
inline V4 phi_plus() { return ket(1, 0, 0, 1) / std::sqrt(2.0); }
inline V4 phi_minus() { return ket(1, 0, 0, -1) / std::sqrt(2.0); }

// Partial transpose over the second factor via explicit reshaping.
inline M4 partial_transpose(const M4& m) {
  M4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + j, 2 * k + l) = m(2 * i + l, 2 * k + j);
  return out;
}

inline double min_eig(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  return solver.eigenvalues().minCoeff();
}

inline double ppt_min(const M4& rho) { return min_eig(partial_transpose(rho)); }

inline double ex(const M4& rho, const M4& o) { return (rho * o).trace().real(); }

struct PairValues {
  double var_a, var_b, var_sum, cov;
};

inline PairValues pair_values(const M4& rho, const M2& a, const M2& b) {
  const M4 A = kron(a, id2());
  const M4 B = kron(id2(), b);
  const M4 S = A + B;
  PairValues v{};
  v.var_a = ex(rho, A * A) - std::pow(ex(rho, A), 2);
  v.var_b = ex(rho, B * B) - std::pow(ex(rho, B), 2);
  v.var_sum = ex(rho, S * S) - std::pow(ex(rho, S), 2);
  v.cov = ex(rho, A * B) - ex(rho, A) * ex(rho, B);
  return v;
}

// L and ML over identical Pauli pairs sigma_z, sigma_x[, sigma_y].
inline std::pair<double, double> l_ml(const M4& rho, bool with_y) {
  double l = 0, ml = 0;
  for (const M2& o : {sz(), sx(), sy()}) {
    if (!with_y && o.isApprox(sy())) continue;
    const PairValues v = pair_values(rho, o, o);
    l += v.var_sum;
    ml += v.var_a + v.var_b - 2 * std::abs(v.cov);
  }
  return {l, ml};
}

}  // namespace oracle
