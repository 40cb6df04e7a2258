#pragma once

#include <array>
#include <string_view>

#include "mlur/linalg.hpp"
#include "mlur/rng.hpp"

namespace mlur {

/// Tolerances for validating two-qubit states.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-9;
inline constexpr double kUnitaryTol = 1e-10;

enum class BellKind { PsiPlus, PsiMinus, PhiPlus, PhiMinus };
enum class NoiseKind { Werner, MaxPolarized };
enum class SpecialUnitary { U1, U2, U3 };

/// Polarization measurement bases, mapped to Pauli operators:
/// 0/90 -> sigma_z, 45/135 -> sigma_x, R/L -> sigma_y.
enum class Basis { Lin0_90, Lin45_135, CircRL };

inline constexpr std::array<Basis, 3> kAllBases{Basis::Lin0_90, Basis::Lin45_135, Basis::CircRL};
inline constexpr std::array<BellKind, 4> kAllBellKinds{BellKind::PsiPlus, BellKind::PsiMinus,
                                                       BellKind::PhiPlus, BellKind::PhiMinus};

std::string_view to_string(Basis basis);
std::string_view to_string(BellKind kind);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix pauli(Basis basis);

/// Normalized two-qubit ket in the |HH>, |HV>, |VH>, |VV> ordering.
class PureState {
 public:
  /// Throws InputError unless the squared norm is 1 within kNormTol.
  explicit PureState(const std::array<Complex, 4>& amplitudes);

  const std::array<Complex, 4>& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

  /// |<this|other>|^2
  double fidelity(const PureState& other) const;

 private:
  std::array<Complex, 4> amplitudes_;
};

/// Two-qubit state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Validates all invariants; throws InputError on violation.
  explicit DensityMatrix(const ComplexMatrix& matrix);

  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// U_A (x) U_B with each factor a 2x2 unitary.
class LocalUnitaryPair {
 public:
  LocalUnitaryPair(const ComplexMatrix& u_a, const ComplexMatrix& u_b);

  const ComplexMatrix& a() const { return u_a_; }
  const ComplexMatrix& b() const { return u_b_; }
  ComplexMatrix joint() const { return tensor_product(u_a_, u_b_); }

 private:
  ComplexMatrix u_a_;
  ComplexMatrix u_b_;
};

PureState bell_state(BellKind kind);
PureState product_state(const std::array<Complex, 2>& a, const std::array<Complex, 2>& b);

DensityMatrix density_from_pure(const PureState& psi);

/// p |Bell><Bell| + (1-p) chi. Werner noise is I/4; maximally polarized
/// noise is the product state |H,V><H,V|. Throws InputError if p is
/// outside [0, 1].
DensityMatrix noise_mixture(double p, NoiseKind noise, BellKind base = BellKind::PsiMinus);

/// The three local unitaries U1, U2, U3 acting on the first photon; the
/// second factor is the identity.
LocalUnitaryPair special_unitary(SpecialUnitary which);

PureState apply_local_unitary(const LocalUnitaryPair& u, const PureState& psi);
/// (U_A (x) U_B) rho (U_A (x) U_B)^H. Throws InternalError if the result
/// is not a valid density matrix.
DensityMatrix apply_local_unitary(const LocalUnitaryPair& u, const DensityMatrix& rho);

/// Haar-random element of SU(2): a uniform unit quaternion (Shoemake)
/// (w, x, y, z) mapped to [[w + iz, y + ix], [-y + ix, w - iz]].
ComplexMatrix haar_random_su2(Rng& rng);
LocalUnitaryPair haar_random_local_unitary(Rng& rng);

/// Uniform point on the Bloch sphere as a single-qubit ket.
std::array<Complex, 2> random_bloch_ket(Rng& rng);

/// Mixture of k random pure product states with weights uniform on the
/// simplex. Throws InputError if k is 0.
DensityMatrix random_separable_state(Rng& rng, std::size_t k);

/// Haar-random pure two-qubit state.
PureState random_pure_state(Rng& rng);

}  // namespace mlur
