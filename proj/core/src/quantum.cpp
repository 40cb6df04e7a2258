#include "mlur/quantum.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mlur/error.hpp"

namespace mlur {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

ComplexMatrix outer(const std::array<Complex, 4>& v) {
  ComplexMatrix m(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = v[i] * std::conj(v[j]);
  }
  return m;
}

bool is_unitary(const ComplexMatrix& u) {
  return (u.adjoint() * u).max_abs_diff(ComplexMatrix::identity(u.dim())) <= kUnitaryTol;
}

}  // namespace

std::string_view to_string(Basis basis) {
  switch (basis) {
    case Basis::Lin0_90: return "0/90";
    case Basis::Lin45_135: return "45/135";
    case Basis::CircRL: return "R/L";
  }
  return "?";
}

std::string_view to_string(BellKind kind) {
  switch (kind) {
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
  }
  return "?";
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}}; }
ComplexMatrix pauli_z() { return ComplexMatrix::diagonal({1.0, -1.0}); }

ComplexMatrix pauli(Basis basis) {
  switch (basis) {
    case Basis::Lin0_90: return pauli_z();
    case Basis::Lin45_135: return pauli_x();
    case Basis::CircRL: return pauli_y();
  }
  throw InputError("unknown basis");
}

PureState::PureState(const std::array<Complex, 4>& amplitudes) : amplitudes_(amplitudes) {
  double norm = 0.0;
  for (const Complex& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw InputError("non-finite amplitude");
    norm += std::norm(a);
  }
  if (std::abs(norm - 1.0) > kNormTol) {
    throw InputError("pure state is not normalized (norm^2 = " + std::to_string(norm) + ")");
  }
}

double PureState::fidelity(const PureState& other) const {
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < 4; ++i) overlap += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  return std::norm(overlap);
}

DensityMatrix::DensityMatrix(const ComplexMatrix& matrix) : matrix_(matrix) {
  if (matrix_.dim() != 4) throw InputError("density matrix must be 4x4");
  if (!matrix_.is_hermitian(kHermitianTol)) throw InputError("density matrix is not Hermitian");
  if (std::abs(matrix_.trace() - Complex{1.0}) > kTraceTol) {
    throw InputError("density matrix trace is not 1");
  }
  const double min_eig = hermitian_eigenvalues(matrix_).front();
  if (min_eig < -kPositivityTol) {
    throw InputError("density matrix has negative eigenvalue " + std::to_string(min_eig));
  }
}

LocalUnitaryPair::LocalUnitaryPair(const ComplexMatrix& u_a, const ComplexMatrix& u_b) : u_a_(u_a), u_b_(u_b) {
  if (u_a_.dim() != 2 || u_b_.dim() != 2) throw InputError("local unitary factors must be 2x2");
  if (!is_unitary(u_a_) || !is_unitary(u_b_)) throw InputError("local unitary factor is not unitary");
}

PureState bell_state(BellKind kind) {
  const double r = kInvSqrt2;
  switch (kind) {
    case BellKind::PsiPlus: return PureState({0.0, r, r, 0.0});
    case BellKind::PsiMinus: return PureState({0.0, r, -r, 0.0});
    case BellKind::PhiPlus: return PureState({r, 0.0, 0.0, r});
    case BellKind::PhiMinus: return PureState({r, 0.0, 0.0, -r});
  }
  throw InputError("unknown Bell state");
}

PureState product_state(const std::array<Complex, 2>& a, const std::array<Complex, 2>& b) {
  return PureState({a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]});
}

DensityMatrix density_from_pure(const PureState& psi) { return DensityMatrix(outer(psi.amplitudes())); }

DensityMatrix noise_mixture(double p, NoiseKind noise, BellKind base) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("mixing parameter p must lie in [0, 1]");
  ComplexMatrix chi(4);
  switch (noise) {
    case NoiseKind::Werner:
      chi = ComplexMatrix::identity(4) * Complex{0.25};
      break;
    case NoiseKind::MaxPolarized:
      chi(1, 1) = 1.0;  // |H,V><H,V|
      break;
  }
  return DensityMatrix(outer(bell_state(base).amplitudes()) * Complex{p} + chi * Complex{1.0 - p});
}

LocalUnitaryPair special_unitary(SpecialUnitary which) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const double s3 = std::sqrt(3.0);
  switch (which) {
    case SpecialUnitary::U1:
      return {ComplexMatrix{{Complex{1, 1}, Complex{-1, 1}}, {Complex{1, 1}, Complex{1, -1}}} * Complex{0.5}, id};
    case SpecialUnitary::U2:
      return {ComplexMatrix::diagonal({Complex{1, -s3}, Complex{1, s3}}) * Complex{0.5}, id};
    case SpecialUnitary::U3:
      return {pauli_z(), id};
  }
  throw InputError("unknown special unitary");
}

PureState apply_local_unitary(const LocalUnitaryPair& u, const PureState& psi) {
  const ComplexMatrix joint = u.joint();
  std::array<Complex, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out[i] += joint(i, j) * psi[j];
  }
  return PureState(out);
}

DensityMatrix apply_local_unitary(const LocalUnitaryPair& u, const DensityMatrix& rho) {
  const ComplexMatrix joint = u.joint();
  try {
    return DensityMatrix(joint * rho.matrix() * joint.adjoint());
  } catch (const InputError& e) {
    throw InternalError(std::string("local unitary produced an invalid state: ") + e.what());
  }
}

ComplexMatrix haar_random_su2(Rng& rng) {
  const double u0 = rng.uniform();
  const double t1 = 2.0 * std::numbers::pi * rng.uniform();
  const double t2 = 2.0 * std::numbers::pi * rng.uniform();
  const double r1 = std::sqrt(1.0 - u0);
  const double r2 = std::sqrt(u0);
  const double w = r1 * std::sin(t1);
  const double x = r1 * std::cos(t1);
  const double y = r2 * std::sin(t2);
  const double z = r2 * std::cos(t2);
  return {{Complex{w, z}, Complex{y, x}}, {Complex{-y, x}, Complex{w, -z}}};
}

LocalUnitaryPair haar_random_local_unitary(Rng& rng) {
  ComplexMatrix a = haar_random_su2(rng);
  ComplexMatrix b = haar_random_su2(rng);
  return {a, b};
}

std::array<Complex, 2> random_bloch_ket(Rng& rng) {
  const double cos_theta = 2.0 * rng.uniform() - 1.0;
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  const double half_cos = std::sqrt(0.5 * (1.0 + cos_theta));
  const double half_sin = std::sqrt(0.5 * (1.0 - cos_theta));
  return {Complex{half_cos}, std::polar(half_sin, phi)};
}

DensityMatrix random_separable_state(Rng& rng, std::size_t k) {
  if (k == 0) throw InputError("random_separable_state needs at least one term");
  std::vector<double> weights(k);
  double total = 0.0;
  for (double& w : weights) total += (w = rng.exponential());

  ComplexMatrix sum(4);
  for (double w : weights) {
    const auto a = random_bloch_ket(rng);
    const auto b = random_bloch_ket(rng);
    sum += outer(product_state(a, b).amplitudes()) * Complex{w / total};
  }
  return DensityMatrix(sum);
}

PureState random_pure_state(Rng& rng) {
  std::array<Complex, 4> v{};
  double norm = 0.0;
  for (Complex& a : v) {
    a = Complex{rng.normal(), rng.normal()};
    norm += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (Complex& a : v) a *= scale;
  return PureState(v);
}

}  // namespace mlur
