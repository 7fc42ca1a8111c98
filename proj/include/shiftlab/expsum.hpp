#pragma once

// The shifted-prime-power sum
//   S_d(alpha) = sum_{y <= M} (phi(d)/d) k y^(k-1) Lambda(d y + 1) e(y^k alpha),
// pointwise and on uniform frequency grids, plus transforms of sequences on [X].

#include "shiftlab/numeric.hpp"
#include "shiftlab/sieve.hpp"

#include <cstdint>

namespace shiftlab {

struct ExpSumSpec {
  std::int64_t ambient = 0;     // N'
  std::int64_t modulus = 1;     // d
  int degree = 1;               // k
  std::int64_t root_bound = 0;  // M = floor(N'^(1/k))

  static ExpSumSpec make(std::int64_t ambient, std::int64_t modulus, int degree);
  std::int64_t top_power() const { return checked_pow(root_bound, degree); }
};

/// a/q + beta with gcd(a, q) = 1 and |beta| <= 1/2.
struct RationalFrequency {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  double offset = 0.0;

  static RationalFrequency make(std::int64_t numerator, std::int64_t denominator, double offset = 0.0);
  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator) + offset;
  }
};

/// Samples of a transform at j / size, j = 0..size-1.
struct FrequencyGrid {
  ComplexVector values;
  /// Largest frequency index carrying weight before reduction mod size.
  std::int64_t support_degree = 0;

  std::int64_t size() const { return values.size(); }
  /// (1/size) sum_j |values[j]|^2.
  double mean_square() const;
};

/// w(y) = (phi(d)/d) k y^(k-1) Lambda(d y + 1) for y = 1..M, stored at index y - 1.
Eigen::VectorXd shifted_prime_weights(const LambdaTable& table, const ExpSumSpec& spec);

ComplexValue s_d_point(const LambdaTable& table, const ExpSumSpec& spec, double alpha);
ComplexValue s_d_point(const LambdaTable& table, const ExpSumSpec& spec, const RationalFrequency& alpha);

/// Transform of weights (index y - 1) placed at y^k mod grid_size.
FrequencyGrid power_weight_grid(const Eigen::VectorXd& weights, int degree, std::int64_t grid_size,
                                std::size_t memory_ceiling = kDefaultMemoryCeiling);

FrequencyGrid s_d_grid(const LambdaTable& table, const ExpSumSpec& spec, std::int64_t grid_size,
                       std::size_t memory_ceiling = kDefaultMemoryCeiling);

/// Transform of a sequence on [X]; X >= grid_size needs allow_wraparound.
FrequencyGrid nu_hat_grid(const WeightedSequence& seq, std::int64_t grid_size, bool allow_wraparound = false,
                          std::size_t memory_ceiling = kDefaultMemoryCeiling);

}  // namespace shiftlab
