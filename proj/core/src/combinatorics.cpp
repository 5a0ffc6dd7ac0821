#include "evp/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace evp {

namespace {

void check_args(int i, int n, int B) {
  if (B < 1) {
    throw std::invalid_argument("cumulative_ratio: B must be >= 1, got " +
                                std::to_string(B));
  }
  if (n < 1 || n > B) {
    throw std::invalid_argument("cumulative_ratio: n must be in [1, B], got n=" +
                                std::to_string(n) + " with B=" + std::to_string(B));
  }
  if (i < 0 || i > B) {
    throw std::invalid_argument("cumulative_ratio: i must be in [0, B], got i=" +
                                std::to_string(i) + " with B=" + std::to_string(B));
  }
}

// x^n by squaring; x in [0,1] keeps every intermediate in [0,1].
double pow_unit(double x, int n) {
  double result = 1.0;
  double base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace

std::string_view kind_letter(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::Strings:      return "v";
    case EstimatorKind::Combinations: return "u";
    case EstimatorKind::Multisets:    return "w";
  }
  throw std::invalid_argument("kind_letter: invalid EstimatorKind");
}

std::string_view kind_name(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::Strings:      return "strings";
    case EstimatorKind::Combinations: return "combinations";
    case EstimatorKind::Multisets:    return "multisets";
  }
  throw std::invalid_argument("kind_name: invalid EstimatorKind");
}

std::optional<EstimatorKind> kind_from_letter(std::string_view letter) {
  if (letter == "u") return EstimatorKind::Combinations;
  if (letter == "v") return EstimatorKind::Strings;
  if (letter == "w") return EstimatorKind::Multisets;
  return std::nullopt;
}

double cumulative_ratio(EstimatorKind kind, int i, int n, int B) {
  check_args(i, n, B);
  if (i == 0) return 0.0;
  if (i == B) return 1.0;

  switch (kind) {
    case EstimatorKind::Strings:
      return pow_unit(static_cast<double>(i) / static_cast<double>(B), n);
    case EstimatorKind::Combinations: {
      if (i < n) return 0.0;
      double result = 1.0;
      for (int j = 0; j < n; ++j) {
        result *= static_cast<double>(i - j) / static_cast<double>(B - j);
      }
      return result;
    }
    case EstimatorKind::Multisets: {
      double result = 1.0;
      for (int j = 0; j < n; ++j) {
        result *= static_cast<double>(i + j) / static_cast<double>(B + j);
      }
      return result;
    }
  }
  throw std::invalid_argument("cumulative_ratio: invalid EstimatorKind");
}

}  // namespace evp
