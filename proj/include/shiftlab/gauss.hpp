#pragma once

// Complete exponential sums
//   C = sum over r mod q with gcd(t r + b, q) = 1 of e(a r^k / q),
// evaluated directly and as a product over the prime-power factors of q.

#include "shiftlab/numeric.hpp"

#include <cstdint>

namespace shiftlab {

struct CompleteSumSpec {
  std::int64_t modulus = 1;       // q
  std::int64_t numerator = 1;     // a, gcd(a, q) = 1
  int degree = 1;                 // k
  std::int64_t linear_coeff = 1;  // t
  std::int64_t linear_shift = 1;  // b, gcd(b, t) = 1

  /// Throws std::domain_error if an invariant fails.
  void validate() const;
};

inline constexpr std::int64_t kDirectSumLimit = 10'000'000;

ComplexValue complete_sum_direct(const CompleteSumSpec& spec);
ComplexValue complete_sum_factored(const CompleteSumSpec& spec);

/// Unconstrained sum over r mod q of e(a r^k / q).
ComplexValue weyl_sum(std::int64_t q, std::int64_t a, int k);

/// |C| / q^(1 - 1/k + epsilon).
double bound_ratio(const CompleteSumSpec& spec, double epsilon);

struct BoundSweep {
  double worst_ratio = 0;
  std::int64_t worst_modulus = 1;
};

/// Worst bound_ratio over 1 <= q <= q_max with a = t = b = 1.
BoundSweep sweep_bound_ratio(std::int64_t q_max, int k, double epsilon);

}  // namespace shiftlab
