#include "evp/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace evp {

namespace {

constexpr std::size_t kCompensatedSumThreshold = 10'000;
constexpr double kVarianceClampTolerance = 1e-12;

// Neumaier-compensated sum of f(i) over [0, count). Plain accumulation below
// the threshold; pools there are too small for rounding to matter.
template <typename Term>
double accumulate_terms(std::size_t count, Term term) {
  if (count <= kCompensatedSumThreshold) {
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) sum += term(i);
    return sum;
  }
  double sum = 0.0;
  double compensation = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    double value = term(i);
    double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

void check_weights_match(const WeightVector& weights, const ScorePool& pool) {
  if (weights.B != pool.size()) {
    throw std::invalid_argument(
        "estimator: weight vector built for B=" + std::to_string(weights.B) +
        " cannot be applied to a pool of size " + std::to_string(pool.size()));
  }
}

}  // namespace

ScorePool::ScorePool(std::vector<double> scores) : scores_(std::move(scores)) {
  if (scores_.empty()) {
    throw std::invalid_argument("ScorePool: at least one score is required");
  }
  for (double s : scores_) {
    if (!std::isfinite(s)) {
      throw std::invalid_argument("ScorePool: scores must be finite");
    }
  }
  std::sort(scores_.begin(), scores_.end());
}

WeightVector weight_vector(EstimatorKind kind, int n, int B) {
  if (B < 1 || n < 1 || n > B) {
    throw std::invalid_argument("weight_vector: need 1 <= n <= B, got n=" +
                                std::to_string(n) + ", B=" + std::to_string(B));
  }
  WeightVector result{kind, n, B, std::vector<double>(static_cast<std::size_t>(B))};
  double previous = 0.0;  // cumulative_ratio(kind, 0, n, B) is exactly 0
  for (int i = 1; i <= B; ++i) {
    double current = cumulative_ratio(kind, i, n, B);
    result.masses[static_cast<std::size_t>(i - 1)] = current - previous;
    previous = current;
  }
  return result;
}

double expected_max(const WeightVector& weights, const ScorePool& pool) {
  check_weights_match(weights, pool);
  std::span<const double> x = pool.scores();
  const std::vector<double>& w = weights.masses;
  return accumulate_terms(w.size(), [&](std::size_t i) { return w[i] * x[i]; });
}

double expected_max(EstimatorKind kind, const ScorePool& pool, int n) {
  return expected_max(weight_vector(kind, n, pool.size()), pool);
}

double variance_of_max(const WeightVector& weights, const ScorePool& pool) {
  check_weights_match(weights, pool);
  std::span<const double> x = pool.scores();
  const std::vector<double>& w = weights.masses;
  double mean = accumulate_terms(w.size(), [&](std::size_t i) { return w[i] * x[i]; });
  double second_moment =
      accumulate_terms(w.size(), [&](std::size_t i) { return w[i] * x[i] * x[i]; });
  double variance = second_moment - mean * mean;
  if (variance < 0.0 && variance >= -kVarianceClampTolerance) {
    variance = 0.0;
  }
  return variance;
}

double variance_of_max(EstimatorKind kind, const ScorePool& pool, int n) {
  return variance_of_max(weight_vector(kind, n, pool.size()), pool);
}

}  // namespace evp
