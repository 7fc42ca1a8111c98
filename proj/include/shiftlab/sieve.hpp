#pragma once

// Exact von Mangoldt data, progression majorants and empirical checks on
// prime counts in (short) arithmetic progressions.

#include "shiftlab/numeric.hpp"

#include <cstdint>
#include <vector>

namespace shiftlab {

/// Lambda(n) for 1 <= n <= limit, built from a linear smallest-prime-factor sieve.
class LambdaTable {
 public:
  static LambdaTable build(std::int64_t limit, std::size_t memory_ceiling = kDefaultMemoryCeiling);

  std::int64_t limit() const { return limit_; }

  /// Lambda(n); zero outside [1, limit].
  double operator()(std::int64_t n) const {
    return (n >= 1 && n <= limit_) ? values_[static_cast<std::size_t>(n)] : 0.0;
  }

  std::int64_t smallest_prime_factor(std::int64_t n) const;
  bool is_prime(std::int64_t n) const;

  /// Raw storage; index 0 is unused and holds zero.
  const std::vector<double>& values() const { return values_; }
  const std::vector<std::int64_t>& primes() const { return primes_; }

 private:
  std::int64_t limit_ = 0;
  std::vector<double> values_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::int64_t> primes_;
};

/// The progression {offset + step * x : 1 <= x <= length}, contained in [ambient].
struct Progression {
  std::int64_t offset = 0;
  std::int64_t step = 1;
  std::int64_t length = 0;
  std::int64_t ambient = 0;
  bool reduced = true;

  /// Offset may be negative as long as every member is >= 1. Validates
  /// containment, and gcd(offset, step) = 1 when reduced.
  static Progression make(std::int64_t offset, std::int64_t step, std::int64_t length, std::int64_t ambient,
                          bool reduced = true);

  /// The interval [N] = 0 + 1 * [N].
  static Progression interval(std::int64_t n) { return make(0, 1, n, n); }

  std::int64_t member(std::int64_t x) const { return offset + step * x; }
  std::int64_t last() const { return member(length); }
  bool contains(std::int64_t n) const;
  /// Exact integer test that every member lies in parent.
  bool subset_of(const Progression& parent) const;
};

enum class SequenceKind { majorant, balanced, indicator_weighted };

/// Real values on [X]; values(x - 1) holds the value at x.
struct WeightedSequence {
  Eigen::VectorXd values;
  SequenceKind kind = SequenceKind::majorant;

  std::int64_t length() const { return values.size(); }
  double at(std::int64_t x) const { return (x >= 1 && x <= length()) ? values(x - 1) : 0.0; }
};

/// psi(x; q, a): sum of Lambda(n) over n <= x with n = a (mod q).
double psi(const LambdaTable& table, double x, std::int64_t q, std::int64_t a);

/// Sum of Lambda(n) over lo < n <= hi with n = a (mod q).
double psi_range(const LambdaTable& table, std::int64_t lo, std::int64_t hi, std::int64_t q, std::int64_t a);

/// (phi(d)/d) Lambda(b + d x) for 1 <= x <= X.
WeightedSequence lambda_progression(const LambdaTable& table, std::int64_t b, std::int64_t d, std::int64_t length);

struct SiegelWalfiszReport {
  double measured = 0;
  double main_term = 0;
  double relative_error = 0;
};

SiegelWalfiszReport check_siegel_walfisz(const LambdaTable& table, double x, std::int64_t q, std::int64_t a);

struct ShortProgressionReport {
  double sum = 0;
  double lower = 0;
  double upper = 0;
  bool within = false;
  /// h >= x^0.6, the range where the two-sided bound is expected to hold.
  bool in_expected_range = false;
};

ShortProgressionReport check_short_ap(const LambdaTable& table, std::int64_t x, std::int64_t h, std::int64_t q,
                                      std::int64_t a);

}  // namespace shiftlab
