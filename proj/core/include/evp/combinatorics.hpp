#ifndef EVP_COMBINATORICS_HPP_
#define EVP_COMBINATORICS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace evp {

// The three counting models for size-n selections out of B trials. Each
// model induces one expected-maximum estimator:
//
//   Strings      — ordered, with repetition   (the V estimator)
//   Combinations — unordered, no repetition   (the U estimator)
//   Multisets    — unordered, with repetition (the W estimator)
//
// Permutations (ordered, no repetition) are deliberately absent: the
// falling-factorial ratios cancel to the same values as Combinations.
enum class EstimatorKind {
  Strings,
  Combinations,
  Multisets,
};

inline constexpr std::array<EstimatorKind, 3> kAllEstimatorKinds = {
    EstimatorKind::Strings,
    EstimatorKind::Combinations,
    EstimatorKind::Multisets,
};

constexpr std::size_t kind_index(EstimatorKind kind) {
  return static_cast<std::size_t>(kind);
}

// Single-letter tag used in CLI flags and serialized tables:
// u = Combinations, v = Strings, w = Multisets.
std::string_view kind_letter(EstimatorKind kind);

// Human-readable counting-model name ("strings", "combinations", "multisets").
std::string_view kind_name(EstimatorKind kind);

std::optional<EstimatorKind> kind_from_letter(std::string_view letter);

// P(Y_n <= X_(i)) under the given counting model: the probability that a
// size-n selection out of B trials has its maximum within the smallest i
// order statistics.
//
//   Strings:      (i/B)^n
//   Combinations: prod_{j=0}^{n-1} (i-j)/(B-j), zero when i < n
//   Multisets:    prod_{j=0}^{n-1} (i+j)/(B+j)
//
// Evaluated as a product of per-factor fractions so no factorial or
// binomial is ever materialized; every intermediate stays in [0,1].
// Returns exactly 0.0 at i == 0 and exactly 1.0 at i == B.
//
// Requires 0 <= i <= B, 1 <= n <= B, B >= 1; throws std::invalid_argument
// otherwise (arguments are rejected, never clamped).
double cumulative_ratio(EstimatorKind kind, int i, int n, int B);

}  // namespace evp

#endif  // EVP_COMBINATORICS_HPP_
