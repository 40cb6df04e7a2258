#include "mlur/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>

#include "mlur/error.hpp"

namespace mlur {

namespace {

constexpr double kDistributionTol = 1e-12;

// Outcome sign patterns for A, B and AB in (+,+), (+,-), (-,+), (-,-) order.
constexpr std::array<double, 4> kSignA{1.0, 1.0, -1.0, -1.0};
constexpr std::array<double, 4> kSignB{1.0, -1.0, 1.0, -1.0};
constexpr std::array<double, 4> kSignAB{1.0, -1.0, -1.0, 1.0};

struct BasisSample {
  Basis basis;
  std::array<double, 4> freq;
  double shots;
  double mean_a;
  double mean_b;
  double mean_ab;
};

double dot(const std::array<double, 4>& x, const std::array<double, 4>& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

// Delta-method variance of g(f) where f are multinomial frequencies over
// `shots` trials: (sum f_i g_i^2 - (sum f_i g_i)^2) / shots.
double delta_variance(const std::array<double, 4>& freq, const std::array<double, 4>& grad, double shots) {
  double first = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    first += freq[i] * grad[i];
    second += freq[i] * grad[i] * grad[i];
  }
  return std::max(0.0, second - first * first) / shots;
}

std::array<double, 4> combine(double ca, const std::array<double, 4>& a, double cb, const std::array<double, 4>& b) {
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = ca * a[i] + cb * b[i];
  return out;
}

struct PairEstimate {
  EstimatedPair pair;
  double ml_term;
  double l_variance;
  double ml_variance;
};

PairEstimate estimate_pair(const BasisSample& s) {
  const double mean_a = s.mean_a;
  const double mean_b = s.mean_b;
  const double mean_ab = s.mean_ab;

  // A^2 = B^2 = I for Pauli outcomes.
  const double var_a = 1.0 - mean_a * mean_a;
  const double var_b = 1.0 - mean_b * mean_b;
  const double cov = mean_ab - mean_a * mean_b;
  const double var_sum = var_a + var_b + 2.0 * cov;
  const double cov_sign = cov > 0.0 ? 1.0 : (cov < 0.0 ? -1.0 : 0.0);
  const double ml_term = var_a + var_b - 2.0 * std::abs(cov);

  const auto grad_var_a = combine(-2.0 * mean_a, kSignA, 0.0, kSignA);
  const auto grad_var_b = combine(-2.0 * mean_b, kSignB, 0.0, kSignB);
  const auto grad_cov = combine(1.0, kSignAB, -1.0, combine(mean_b, kSignA, mean_a, kSignB));
  const auto grad_var_sum = combine(1.0, combine(1.0, grad_var_a, 1.0, grad_var_b), 2.0, grad_cov);
  const auto grad_ml = combine(1.0, combine(1.0, grad_var_a, 1.0, grad_var_b), -2.0 * cov_sign, grad_cov);

  const auto se = [&](const std::array<double, 4>& g) { return std::sqrt(delta_variance(s.freq, g, s.shots)); };

  PairEstimate out;
  out.pair.basis = s.basis;
  out.pair.var_a = {var_a, se(grad_var_a)};
  out.pair.var_b = {var_b, se(grad_var_b)};
  out.pair.covariance = {cov, se(grad_cov)};
  out.pair.var_sum = {var_sum, se(grad_var_sum)};
  out.ml_term = ml_term;
  out.l_variance = delta_variance(s.freq, grad_var_sum, s.shots);
  out.ml_variance = delta_variance(s.freq, grad_ml, s.shots);
  return out;
}

std::vector<Basis> required_bases(WitnessFamily family) {
  if (family == WitnessFamily::L2) return {Basis::Lin0_90, Basis::Lin45_135};
  return {kAllBases.begin(), kAllBases.end()};
}

EstimatedReport assemble(const std::vector<BasisSample>& samples, WitnessFamily family) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].basis == samples[j].basis) {
        throw InputError("duplicate count table for basis " + std::string(to_string(samples[i].basis)));
      }
    }
  }

  const std::vector<Basis> bases = required_bases(family);
  EstimatedReport report;
  report.separable_bound = 2.0 * (static_cast<double>(bases.size()) - 1.0);
  double l_var = 0.0;
  double ml_var = 0.0;
  for (Basis basis : bases) {
    const auto it = std::find_if(samples.begin(), samples.end(), [&](const BasisSample& s) { return s.basis == basis; });
    if (it == samples.end()) throw InputError("missing count table for basis " + std::string(to_string(basis)));
    if (it->shots < 2.0) throw InputError("at least 2 shots per basis are needed for a variance estimate");

    const PairEstimate p = estimate_pair(*it);
    report.l_value.value += p.pair.var_sum.value;
    report.ml_value.value += p.ml_term;
    l_var += p.l_variance;
    ml_var += p.ml_variance;
    report.pairs.push_back(p.pair);
  }
  report.l_value.std_error = std::sqrt(l_var);
  report.ml_value.std_error = std::sqrt(ml_var);
  report.verdict_l = verdict_for(report.l_value.value, report.separable_bound);
  report.verdict_ml = verdict_for(report.ml_value.value, report.separable_bound);
  return report;
}

}  // namespace

OutcomeDistribution outcome_distribution(const DensityMatrix& rho, Basis basis) {
  const ComplexMatrix op = pauli(basis);
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const ComplexMatrix plus = (id + op) * Complex{0.5};
  const ComplexMatrix minus = (id - op) * Complex{0.5};

  OutcomeDistribution dist;
  dist.basis = basis;
  const std::array<const ComplexMatrix*, 2> proj{&plus, &minus};
  double total = 0.0;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const double p = (rho.matrix() * tensor_product(*proj[a], *proj[b])).trace().real();
      dist.probabilities[2 * a + b] = std::clamp(p, 0.0, 1.0);
      total += dist.probabilities[2 * a + b];
    }
  }
  for (double& p : dist.probabilities) p /= total;
  return dist;
}

CountTable sample_counts(const OutcomeDistribution& dist, std::uint64_t shots, Rng& rng) {
  if (shots == 0) throw InputError("sample_counts needs at least one shot");
  double total = 0.0;
  for (double p : dist.probabilities) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("outcome probability outside [0, 1]");
    total += p;
  }
  if (std::abs(total - 1.0) > kDistributionTol) throw InputError("outcome probabilities do not sum to 1");

  // Sequential conditional binomials; the tail mass is summed directly so a
  // zero-probability last outcome never receives leftover counts.
  CountTable table;
  table.basis = dist.basis;
  table.shots = shots;
  std::uint64_t remaining = shots;
  for (std::size_t i = 0; i < 3 && remaining > 0; ++i) {
    const double p = dist.probabilities[i];
    double tail = 0.0;
    for (std::size_t j = i; j < 4; ++j) tail += dist.probabilities[j];
    std::uint64_t n = 0;
    if (p > 0.0) {
      const double conditional = p / tail;
      if (conditional >= 1.0) {
        n = remaining;
      } else {
        std::binomial_distribution<std::uint64_t> draw(remaining, conditional);
        n = draw(rng);
      }
    }
    table.counts[i] = n;
    remaining -= n;
  }
  table.counts[3] = remaining;
  return table;
}

EstimatedReport estimate_witnesses(std::span<const CountTable> tables, WitnessFamily family) {
  std::vector<BasisSample> samples;
  for (const auto& t : tables) {
    std::uint64_t sum = 0;
    for (auto c : t.counts) sum += c;
    if (sum != t.shots) throw InputError("count table counts do not sum to shots");
    const auto n = [&](std::size_t i) { return static_cast<std::int64_t>(t.counts[i]); };
    const double shots = static_cast<double>(t.shots);
    BasisSample s{t.basis, {}, shots, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i) s.freq[i] = static_cast<double>(t.counts[i]) / shots;
    // Integer numerators: a deterministic sum A + B stays exactly deterministic.
    s.mean_a = static_cast<double>(n(0) + n(1) - n(2) - n(3)) / shots;
    s.mean_b = static_cast<double>(n(0) - n(1) + n(2) - n(3)) / shots;
    s.mean_ab = static_cast<double>(n(0) - n(1) - n(2) + n(3)) / shots;
    samples.push_back(s);
  }
  return assemble(samples, family);
}

EstimatedReport estimate_witnesses(std::span<const ExactFrequencies> tables, WitnessFamily family) {
  std::vector<BasisSample> samples;
  for (const auto& t : tables) {
    samples.push_back({t.basis, t.frequencies, t.shots, dot(kSignA, t.frequencies), dot(kSignB, t.frequencies),
                       dot(kSignAB, t.frequencies)});
  }
  return assemble(samples, family);
}

}  // namespace mlur
