#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlur/linalg.hpp"
#include "mlur/quantum.hpp"

namespace mlur {

/// Margin below the separable bound required before a value counts as a
/// violation. Reported values are never adjusted by it.
inline constexpr double kVerdictMargin = 1e-9;

/// Tolerance on the imaginary part of a Hermitian expectation value.
inline constexpr double kExpectationImagTol = 1e-10;

struct ObservablePair {
  ComplexMatrix a;
  ComplexMatrix b;
  std::string label;
};

/// Paired local observables {(A_i, B_i)} with the greatest lower bounds
/// U_A, U_B of the single-party variance sums.
class ObservableSet {
 public:
  /// Throws InputError on non-Hermitian or non-2x2 observables, negative
  /// bounds, or an empty pair list.
  ObservableSet(std::vector<ObservablePair> pairs, double bound_a, double bound_b);

  const std::vector<ObservablePair>& pairs() const { return pairs_; }
  double bound_a() const { return bound_a_; }
  double bound_b() const { return bound_b_; }
  double separable_bound() const { return bound_a_ + bound_b_; }

 private:
  std::vector<ObservablePair> pairs_;
  double bound_a_;
  double bound_b_;
};

/// Identical Pauli measurements on both photons in the given bases, with
/// U_A = U_B = (number of bases - 1).
ObservableSet pauli_pair_set(std::span<const Basis> bases);
/// {0/90, 45/135}: separable bound 2.
ObservableSet l2_set();
/// {0/90, 45/135, R/L}: separable bound 4.
ObservableSet l3_set();

struct StandardSets {
  ObservableSet l2;
  ObservableSet l3;
};
/// The MLUR variants reuse these sets; only the functional differs.
StandardSets standard_sets();

enum class Verdict { EntanglementDetected, Inconclusive };
std::string_view to_string(Verdict verdict);
Verdict verdict_for(double value, double separable_bound);

struct PairStats {
  std::string label;
  double var_a = 0.0;
  double var_b = 0.0;
  double var_sum = 0.0;
  double covariance = 0.0;
};

struct WitnessReport {
  std::vector<PairStats> pairs;
  double l_value = 0.0;
  double ml_value = 0.0;
  double separable_bound = 0.0;
  Verdict verdict_l = Verdict::Inconclusive;
  Verdict verdict_ml = Verdict::Inconclusive;
};

/// Tr(rho o) for Hermitian o. Throws InputError if o is not Hermitian and
/// InternalError if the trace has a non-negligible imaginary part.
double expectation(const DensityMatrix& rho, const ComplexMatrix& o);

/// Variance of a joint 4x4 observable.
double variance(const DensityMatrix& rho, const ComplexMatrix& o);

/// <a (x) b> - <a (x) I><I (x) b>
double covariance(const DensityMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b);

/// Variance of a (x) I + I (x) b, computed directly (not from the
/// decomposition into local variances and covariance).
double variance_of_sum(const DensityMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b);

PairStats pair_stats(const DensityMatrix& rho, const ObservablePair& pair);

/// sum_i var(A_i + B_i)
double lur_value(const DensityMatrix& rho, const ObservableSet& set);

/// sum_i var(A_i) + var(B_i) - 2 |C(A_i, B_i)|
double mlur_value(const DensityMatrix& rho, const ObservableSet& set);

/// Greatest lower bound of sum_i var(O_i) over single-qubit states.
///
/// Each variance is concave in the state, so the minimum over mixed states
/// is attained on pure states; the search runs over the Bloch sphere with a
/// 64 x 128 (polar x azimuth) grid followed by compass-search refinement of
/// the best grid points. Throws InputError for an empty list or
/// non-Hermitian 2x2 input.
double local_bound(std::span<const ComplexMatrix> observables);

/// Smallest eigenvalue of the partial transpose. Negative iff the state is
/// entangled (two qubits).
double ppt_min_eigenvalue(const DensityMatrix& rho);

/// Full per-pair breakdown with L/ML values and verdicts. Throws
/// InternalError if the variance-of-sum decomposition fails to close.
WitnessReport evaluate(const DensityMatrix& rho, const ObservableSet& set);

}  // namespace mlur
