#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "mlur/criteria.hpp"
#include "mlur/quantum.hpp"
#include "mlur/rng.hpp"

namespace mlur {

/// Joint outcome order used by distributions and count tables.
enum class Outcome : std::size_t { PlusPlus = 0, PlusMinus = 1, MinusPlus = 2, MinusMinus = 3 };

struct OutcomeDistribution {
  Basis basis = Basis::Lin0_90;
  /// (+,+), (+,-), (-,+), (-,-)
  std::array<double, 4> probabilities{};
};

struct CountTable {
  Basis basis = Basis::Lin0_90;
  std::array<std::uint64_t, 4> counts{};
  std::uint64_t shots = 0;
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

struct EstimatedPair {
  Basis basis = Basis::Lin0_90;
  Estimate var_a;
  Estimate var_b;
  Estimate var_sum;
  Estimate covariance;
};

/// Plug-in estimates of the WitnessReport quantities from finite counts.
struct EstimatedReport {
  std::vector<EstimatedPair> pairs;
  Estimate l_value;
  Estimate ml_value;
  double separable_bound = 0.0;
  Verdict verdict_l = Verdict::Inconclusive;
  Verdict verdict_ml = Verdict::Inconclusive;
};

enum class WitnessFamily { L2, L3 };

/// Tr[rho (P_a (x) P_b)] over the +/-1 eigenprojectors of the basis's
/// Pauli operator. Round-off negatives are clipped to zero.
OutcomeDistribution outcome_distribution(const DensityMatrix& rho, Basis basis);

/// Multinomial draw of `shots` coincidences. Throws InputError if shots is 0
/// or the probabilities do not form a distribution.
CountTable sample_counts(const OutcomeDistribution& dist, std::uint64_t shots, Rng& rng);

/// Expected counts shots * p (not rounded); for consistency checks that
/// bypass sampling noise.
struct ExactFrequencies {
  Basis basis = Basis::Lin0_90;
  std::array<double, 4> frequencies{};
  double shots = 0.0;
};

/// Reconstructs the L2 or L3 witness from one count table per basis.
///
/// Means of A, B and AB come straight from the frequencies; variances and
/// covariances are plug-in (divide by N), so var(A+B) = var(A) + var(B) +
/// 2 C(A,B) holds exactly on every sample. |C| is taken as the absolute
/// plug-in covariance, which biases ML upward when the true covariance is
/// near zero. Standard errors are first-order delta-method propagations of
/// the multinomial covariance of the frequencies; bases are independent.
///
/// Throws InputError if a required basis is missing or duplicated, or a
/// table has fewer than 2 shots.
EstimatedReport estimate_witnesses(std::span<const CountTable> tables, WitnessFamily family);
EstimatedReport estimate_witnesses(std::span<const ExactFrequencies> tables, WitnessFamily family);

}  // namespace mlur
