#include "mlur/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "mlur/error.hpp"

namespace mlur {

namespace {

constexpr double kDecompositionTol = 1e-10;

constexpr std::size_t kPolarGrid = 64;
constexpr std::size_t kAzimuthGrid = 128;
constexpr std::size_t kRefineStarts = 8;
constexpr double kRefineMinStep = 1e-10;

void require_local_observable(const ComplexMatrix& o) {
  if (o.dim() != 2) throw InputError("local observables must be 2x2");
  if (!o.is_hermitian(kHermitianTol)) throw InputError("local observable is not Hermitian");
}

const ComplexMatrix& id2() {
  static const ComplexMatrix id = ComplexMatrix::identity(2);
  return id;
}

double pure_variance_sum(std::span<const ComplexMatrix> observables, std::span<const ComplexMatrix> squares,
                         double theta, double phi) {
  const Complex k0{std::cos(0.5 * theta)};
  const Complex k1 = std::polar(std::sin(0.5 * theta), phi);
  const auto quad = [&](const ComplexMatrix& o) {
    const Complex v = std::conj(k0) * (o(0, 0) * k0 + o(0, 1) * k1) + std::conj(k1) * (o(1, 0) * k0 + o(1, 1) * k1);
    return v.real();
  };
  double total = 0.0;
  for (std::size_t i = 0; i < observables.size(); ++i) {
    const double mean = quad(observables[i]);
    total += quad(squares[i]) - mean * mean;
  }
  return total;
}

}  // namespace

ObservableSet::ObservableSet(std::vector<ObservablePair> pairs, double bound_a, double bound_b)
    : pairs_(std::move(pairs)), bound_a_(bound_a), bound_b_(bound_b) {
  if (pairs_.empty()) throw InputError("observable set needs at least one pair");
  for (const auto& pair : pairs_) {
    require_local_observable(pair.a);
    require_local_observable(pair.b);
  }
  if (!(bound_a_ >= 0.0) || !(bound_b_ >= 0.0)) throw InputError("local bounds must be non-negative");
}

ObservableSet pauli_pair_set(std::span<const Basis> bases) {
  if (bases.empty()) throw InputError("pauli_pair_set needs at least one basis");
  std::vector<ObservablePair> pairs;
  for (Basis basis : bases) pairs.push_back({pauli(basis), pauli(basis), std::string(to_string(basis))});
  // sum of k Pauli variances is k - |r|^2 restricted to k axes, minimized at k - 1
  const double bound = static_cast<double>(bases.size()) - 1.0;
  return ObservableSet(std::move(pairs), bound, bound);
}

ObservableSet l2_set() {
  constexpr std::array bases{Basis::Lin0_90, Basis::Lin45_135};
  return pauli_pair_set(bases);
}

ObservableSet l3_set() { return pauli_pair_set(kAllBases); }

StandardSets standard_sets() { return {l2_set(), l3_set()}; }

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::EntanglementDetected ? "ENTANGLEMENT_DETECTED" : "INCONCLUSIVE";
}

Verdict verdict_for(double value, double separable_bound) {
  return value < separable_bound - kVerdictMargin ? Verdict::EntanglementDetected : Verdict::Inconclusive;
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& o) {
  if (o.dim() != 4) throw InputError("expectation needs a 4x4 observable");
  if (!o.is_hermitian(kHermitianTol)) throw InputError("expectation of a non-Hermitian operator");
  const Complex value = (rho.matrix() * o).trace();
  if (std::abs(value.imag()) >= kExpectationImagTol) {
    throw InternalError("expectation value has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

double variance(const DensityMatrix& rho, const ComplexMatrix& o) {
  const double mean = expectation(rho, o);
  return expectation(rho, o * o) - mean * mean;
}

double covariance(const DensityMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b) {
  require_local_observable(a);
  require_local_observable(b);
  return expectation(rho, tensor_product(a, b)) - expectation(rho, tensor_product(a, id2())) *
                                                      expectation(rho, tensor_product(id2(), b));
}

double variance_of_sum(const DensityMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b) {
  require_local_observable(a);
  require_local_observable(b);
  return variance(rho, tensor_product(a, id2()) + tensor_product(id2(), b));
}

PairStats pair_stats(const DensityMatrix& rho, const ObservablePair& pair) {
  PairStats stats;
  stats.label = pair.label;
  stats.var_a = variance(rho, tensor_product(pair.a, id2()));
  stats.var_b = variance(rho, tensor_product(id2(), pair.b));
  stats.covariance = covariance(rho, pair.a, pair.b);
  stats.var_sum = variance_of_sum(rho, pair.a, pair.b);
  return stats;
}

double lur_value(const DensityMatrix& rho, const ObservableSet& set) {
  double total = 0.0;
  for (const auto& pair : set.pairs()) total += variance_of_sum(rho, pair.a, pair.b);
  return total;
}

double mlur_value(const DensityMatrix& rho, const ObservableSet& set) {
  double total = 0.0;
  for (const auto& pair : set.pairs()) {
    const PairStats s = pair_stats(rho, pair);
    total += s.var_a + s.var_b - 2.0 * std::abs(s.covariance);
  }
  return total;
}

double local_bound(std::span<const ComplexMatrix> observables) {
  if (observables.empty()) throw InputError("local_bound needs at least one observable");
  std::vector<ComplexMatrix> squares;
  squares.reserve(observables.size());
  for (const auto& o : observables) {
    require_local_observable(o);
    squares.push_back(o * o);
  }

  const double d_theta = std::numbers::pi / static_cast<double>(kPolarGrid - 1);
  const double d_phi = 2.0 * std::numbers::pi / static_cast<double>(kAzimuthGrid);

  struct Point {
    double value;
    double theta;
    double phi;
  };
  std::vector<Point> grid;
  grid.reserve(kPolarGrid * kAzimuthGrid);
  for (std::size_t i = 0; i < kPolarGrid; ++i) {
    for (std::size_t j = 0; j < kAzimuthGrid; ++j) {
      const double theta = d_theta * static_cast<double>(i);
      const double phi = d_phi * static_cast<double>(j);
      grid.push_back({pure_variance_sum(observables, squares, theta, phi), theta, phi});
    }
  }
  const std::size_t starts = std::min(kRefineStarts, grid.size());
  std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(starts), grid.end(),
                    [](const Point& l, const Point& r) { return l.value < r.value; });

  double best = grid.front().value;
  for (std::size_t s = 0; s < starts; ++s) {
    Point p = grid[s];
    double step = std::max(d_theta, d_phi);
    while (step > kRefineMinStep) {
      bool moved = false;
      for (const auto& [dt, dp] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}) {
        const double theta = p.theta + dt * step;
        const double phi = p.phi + dp * step;
        const double value = pure_variance_sum(observables, squares, theta, phi);
        if (value < p.value) {
          p = {value, theta, phi};
          moved = true;
        }
      }
      if (!moved) step *= 0.5;
    }
    best = std::min(best, p.value);
  }
  return best;
}

double ppt_min_eigenvalue(const DensityMatrix& rho) {
  return hermitian_eigenvalues(partial_transpose_second(rho.matrix())).front();
}

WitnessReport evaluate(const DensityMatrix& rho, const ObservableSet& set) {
  WitnessReport report;
  report.separable_bound = set.separable_bound();
  for (const auto& pair : set.pairs()) {
    PairStats s = pair_stats(rho, pair);
    const double decomposed = s.var_a + s.var_b + 2.0 * s.covariance;
    if (std::abs(decomposed - s.var_sum) > kDecompositionTol) {
      throw InternalError("variance-of-sum decomposition failed for pair " + s.label);
    }
    report.l_value += s.var_sum;
    report.ml_value += s.var_a + s.var_b - 2.0 * std::abs(s.covariance);
    report.pairs.push_back(std::move(s));
  }
  report.verdict_l = verdict_for(report.l_value, report.separable_bound);
  report.verdict_ml = verdict_for(report.ml_value, report.separable_bound);
  return report;
}

}  // namespace mlur
