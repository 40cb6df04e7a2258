#pragma once

#include <cstdint>
#include <vector>

#include "mlur/criteria.hpp"
#include "mlur/experiment.hpp"
#include "mlur/quantum.hpp"

namespace mlur::cli {

struct SweepRow {
  double p = 0.0;
  double l2 = 0.0;
  double ml2 = 0.0;
  double l3 = 0.0;
  double ml3 = 0.0;
  double ppt_min_eig = 0.0;
};

/// Evenly spaced grid start..stop with `steps` points (steps >= 2).
std::vector<double> linear_grid(double start, double stop, std::size_t steps);

std::vector<SweepRow> noise_sweep(NoiseKind noise, BellKind base, const std::vector<double>& grid);

struct HaarSample {
  double l3 = 0.0;
  double ml3 = 0.0;
  double ppt_min_eig = 0.0;
  std::array<double, 3> covariances{};
};

struct HaarSummary {
  std::size_t samples = 0;
  std::size_t l3_detections = 0;
  std::size_t ml3_detections = 0;
  std::size_t ml3_only = 0;
  std::size_t l3_only = 0;
  std::size_t dominance_violations = 0;
  double mean_l3 = 0.0;
  double mean_ml3 = 0.0;
  double min_ppt_min_eig = 0.0;
  double max_ppt_min_eig = 0.0;

  double l3_fraction() const { return static_cast<double>(l3_detections) / static_cast<double>(samples); }
  double ml3_fraction() const { return static_cast<double>(ml3_detections) / static_cast<double>(samples); }
};

struct HaarStudy {
  std::vector<HaarSample> per_sample;
  HaarSummary summary;
};

/// Applies `samples` Haar-random local unitary pairs to a Bell state and
/// evaluates L3/ML3. Sample i draws from Rng(seed).split(i), so the result
/// does not depend on `threads`.
HaarStudy haar_study(BellKind bell, std::size_t samples, std::uint64_t seed, unsigned threads);

struct SimulationResult {
  std::vector<CountTable> tables;
  EstimatedReport l2;
  EstimatedReport l3;
};

/// Samples `shots` coincidences in each of the three bases (basis i draws
/// from Rng(seed).split(i)) and estimates both witnesses from the same tables.
SimulationResult simulate_experiment(const DensityMatrix& rho, std::uint64_t shots, std::uint64_t seed);

}  // namespace mlur::cli
