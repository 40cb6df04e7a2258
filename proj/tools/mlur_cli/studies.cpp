#include "mlur_cli/studies.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <thread>

#include "mlur/error.hpp"

namespace mlur::cli {

std::vector<double> linear_grid(double start, double stop, std::size_t steps) {
  if (steps < 2) throw InputError("grid needs at least 2 steps");
  std::vector<double> grid(steps);
  const double span = stop - start;
  for (std::size_t i = 0; i < steps; ++i) {
    grid[i] = start + span * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  grid.back() = stop;
  return grid;
}

std::vector<SweepRow> noise_sweep(NoiseKind noise, BellKind base, const std::vector<double>& grid) {
  const StandardSets sets = standard_sets();
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double p : grid) {
    const DensityMatrix rho = noise_mixture(p, noise, base);
    const WitnessReport r2 = evaluate(rho, sets.l2);
    const WitnessReport r3 = evaluate(rho, sets.l3);
    rows.push_back({p, r2.l_value, r2.ml_value, r3.l_value, r3.ml_value, ppt_min_eigenvalue(rho)});
  }
  return rows;
}

namespace {

HaarSample haar_sample(const PureState& bell, const ObservableSet& l3, std::uint64_t seed, std::size_t index) {
  Rng rng = Rng(seed).split(index);
  const LocalUnitaryPair u = haar_random_local_unitary(rng);
  const DensityMatrix rho = density_from_pure(apply_local_unitary(u, bell));
  const WitnessReport report = evaluate(rho, l3);
  HaarSample s;
  s.l3 = report.l_value;
  s.ml3 = report.ml_value;
  s.ppt_min_eig = ppt_min_eigenvalue(rho);
  for (std::size_t i = 0; i < 3; ++i) s.covariances[i] = report.pairs[i].covariance;
  return s;
}

}  // namespace

HaarStudy haar_study(BellKind bell_kind, std::size_t samples, std::uint64_t seed, unsigned threads) {
  if (samples == 0) throw InputError("haar study needs at least one sample");
  const PureState bell = bell_state(bell_kind);
  const ObservableSet l3 = l3_set();

  HaarStudy study;
  study.per_sample.resize(samples);

  const unsigned workers = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::min<std::size_t>(samples, 256)));
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < samples; i += workers) study.per_sample[i] = haar_sample(bell, l3, seed, i);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  HaarSummary& sum = study.summary;
  sum.samples = samples;
  sum.min_ppt_min_eig = std::numeric_limits<double>::infinity();
  sum.max_ppt_min_eig = -std::numeric_limits<double>::infinity();
  const double bound = l3.separable_bound();
  for (const HaarSample& s : study.per_sample) {
    const bool l_hit = verdict_for(s.l3, bound) == Verdict::EntanglementDetected;
    const bool ml_hit = verdict_for(s.ml3, bound) == Verdict::EntanglementDetected;
    sum.l3_detections += l_hit;
    sum.ml3_detections += ml_hit;
    sum.ml3_only += ml_hit && !l_hit;
    sum.l3_only += l_hit && !ml_hit;
    sum.dominance_violations += s.ml3 > s.l3 + 1e-12;
    sum.mean_l3 += s.l3;
    sum.mean_ml3 += s.ml3;
    sum.min_ppt_min_eig = std::min(sum.min_ppt_min_eig, s.ppt_min_eig);
    sum.max_ppt_min_eig = std::max(sum.max_ppt_min_eig, s.ppt_min_eig);
  }
  sum.mean_l3 /= static_cast<double>(samples);
  sum.mean_ml3 /= static_cast<double>(samples);
  return study;
}

SimulationResult simulate_experiment(const DensityMatrix& rho, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 2) throw InputError("simulate needs at least 2 shots per basis");
  SimulationResult result;
  const Rng master(seed);
  for (std::size_t i = 0; i < kAllBases.size(); ++i) {
    Rng rng = master.split(i);
    result.tables.push_back(sample_counts(outcome_distribution(rho, kAllBases[i]), shots, rng));
  }
  result.l2 = estimate_witnesses(result.tables, WitnessFamily::L2);
  result.l3 = estimate_witnesses(result.tables, WitnessFamily::L3);
  return result;
}

}  // namespace mlur::cli
