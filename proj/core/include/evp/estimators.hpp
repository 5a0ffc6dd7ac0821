#ifndef EVP_ESTIMATORS_HPP_
#define EVP_ESTIMATORS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "evp/combinatorics.hpp"

namespace evp {

// An immutable pool of B trial scores, kept sorted ascending. Duplicates are
// legal order statistics and are kept as-is. Construction rejects empty input
// and non-finite values.
class ScorePool {
 public:
  explicit ScorePool(std::vector<double> scores);

  int size() const { return static_cast<int>(scores_.size()); }

  // i-th order statistic, 1-based: order_statistic(1) is the minimum,
  // order_statistic(size()) the maximum.
  double order_statistic(int i) const { return scores_[static_cast<std::size_t>(i - 1)]; }

  double min() const { return scores_.front(); }
  double max() const { return scores_.back(); }

  std::span<const double> scores() const { return scores_; }

 private:
  std::vector<double> scores_;
};

// Probability masses over the order statistics of a size-B pool:
// masses[i-1] = P(Y_n = X_(i)) under the kind's counting model, obtained as
// adjacent differences of cumulative_ratio. Masses are nonnegative and sum
// to 1 up to rounding; for Combinations, masses below the n-th order
// statistic are exactly zero.
struct WeightVector {
  EstimatorKind kind;
  int n = 0;
  int B = 0;
  std::vector<double> masses;
};

// Requires 1 <= n <= B.
WeightVector weight_vector(EstimatorKind kind, int n, int B);

// Estimate of E[max of n i.i.d. draws] from the pool's B observations:
// sum_i X_(i) * masses[i]. The result lies in [min, max] of the pool.
double expected_max(EstimatorKind kind, const ScorePool& pool, int n);

// Same, reusing a precomputed weight vector (weights.B must equal pool.size()).
double expected_max(const WeightVector& weights, const ScorePool& pool);

// Plug-in variance of the maximum under the same discrete law:
// sum_i X_(i)^2 * masses[i] - expected_max^2, clamped to 0 when rounding
// produces a negative value within 1e-12.
double variance_of_max(EstimatorKind kind, const ScorePool& pool, int n);
double variance_of_max(const WeightVector& weights, const ScorePool& pool);

}  // namespace evp

#endif  // EVP_ESTIMATORS_HPP_
