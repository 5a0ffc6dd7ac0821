#ifndef EVP_CURVES_HPP_
#define EVP_CURVES_HPP_

#include <array>
#include <vector>

#include "evp/estimators.hpp"

namespace evp {

struct EvpPoint {
  int n = 0;
  double mean = 0.0;
  double variance = 0.0;
};

// Expected-best-of-n curve over a pool of B trials: one point per budget
// n = 1..B, mean non-decreasing in n.
struct EvpCurve {
  EstimatorKind kind;
  int B = 0;
  std::vector<EvpPoint> points;
};

// Full curve for one estimator; the pool is sorted once at construction.
EvpCurve evp_curve(EstimatorKind kind, const ScorePool& pool);

// All three estimators over the same pool, in EstimatorKind order.
std::array<EvpCurve, 3> evp_curve_all(const ScorePool& pool);

}  // namespace evp

#endif  // EVP_CURVES_HPP_
