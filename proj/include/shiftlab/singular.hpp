#pragma once

// Local factors of the singular series for the configuration
// x1 + x2 + x3^k = 0 (mod p) with p not dividing (q x1 + a)(q x2 + a)(q x3 + 1).

#include "shiftlab/numeric.hpp"

#include <cstdint>
#include <vector>

namespace shiftlab {

/// Number of admissible (x1, x2, x3) mod p. Requires p prime, p not dividing q.
std::int64_t local_count_M(std::int64_t p, std::int64_t q, std::int64_t a, int k);

/// A(p) through p M(p) = phi(p)^3 (A(p) + 1).
double local_factor_A(std::int64_t p, std::int64_t q, std::int64_t a, int k);

/// A(p) from the defining sum over b of complete exponential sums; O(p^2).
double local_factor_A_sums(std::int64_t p, std::int64_t q, std::int64_t a, int k);

struct LocalFactorReport {
  std::int64_t prime = 0;
  double a_value = 0;      // identity path
  double a_from_sums = 0;  // exponential-sum path
  std::int64_t m_count = 0;
  double identity_residual = 0;  // |p M(p) - phi(p)^3 (A_sums(p) + 1)|
};

LocalFactorReport local_factor_report(std::int64_t p, std::int64_t q, std::int64_t a, int k);

struct SingularSeriesReport {
  std::int64_t q = 1;
  std::int64_t a = 1;
  int k = 1;
  std::int64_t prime_limit = 1;
  double partial_product = 1;
  /// Same product accumulated in descending prime order.
  double reversed_product = 1;
  /// Extrapolated sum of |A(p)| over p > prime_limit; +inf if the fit does not decay.
  double tail_bound_estimate = 0;
  double fitted_exponent = 0;
  std::int64_t factors = 0;
};

SingularSeriesReport singular_series(std::int64_t q, std::int64_t a, int k, std::int64_t prime_limit);

/// Primes p <= limit (simple sieve).
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

}  // namespace shiftlab
