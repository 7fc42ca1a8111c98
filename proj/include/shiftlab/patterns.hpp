#pragma once

// Counting configurations p1, p1 + (p2 - 1)^k inside prime subsets of a
// progression a + q^k [N'], directly and through three grid transforms.

#include "shiftlab/expsum.hpp"
#include "shiftlab/sieve.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace shiftlab {

struct PrimeSubset {
  std::int64_t ambient = 0;
  std::vector<std::int64_t> members;  // sorted, unique, prime
  std::optional<Progression> progression;

  /// Sorts, deduplicates and checks primality (and membership in prog when given).
  static PrimeSubset make(const LambdaTable& table, std::int64_t ambient, std::vector<std::int64_t> members,
                          std::optional<Progression> prog = std::nullopt);

  bool contains(std::int64_t n) const;
  std::size_t size() const { return members.size(); }
};

inline constexpr std::size_t kWitnessCap = 64;

struct PatternCount {
  double weighted = 0;
  /// Pairs (p1, p2) with p2 = q y + 1 a prime power; the weighted sum has the same support.
  std::int64_t unweighted = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> witnesses;  // at most kWitnessCap
};

/// Progression a + q^k [N'] carrying the count; step must equal q^k.
struct PatternFrame {
  Progression prog;
  std::int64_t root_step = 1;  // q
  int degree = 1;              // k

  static PatternFrame make(const Progression& prog, std::int64_t q, int k);
  std::int64_t root_bound() const { return integer_root(prog.length, degree); }
};

PatternCount count_direct(const LambdaTable& table, const PrimeSubset& set, const PatternFrame& frame);

struct FourierPatternCount {
  double weighted = 0;
  /// grid_size > N' + M^k: no wraparound, identity exact.
  bool exact = false;
};

FourierPatternCount count_fourier(const LambdaTable& table, const PrimeSubset& set, const PatternFrame& frame,
                                  std::int64_t grid_size);

enum class PatternFreeStrategy { greedy_descending, greedy_ascending, greedy_shuffled, congruence_filter };

struct PatternFreeRequest {
  PatternFreeStrategy strategy = PatternFreeStrategy::greedy_descending;
  std::int64_t filter_modulus = 1;          // congruence_filter
  std::vector<std::int64_t> filter_residues;
  std::uint64_t seed = 1;                   // greedy_shuffled
};

struct PatternFreeResult {
  PrimeSubset set;
  bool pattern_free = false;
  PatternCount verification;
};

/// Subsets of the primes <= N; greedy strategies are deterministic and pattern-free.
PatternFreeResult find_pattern_free(const LambdaTable& table, std::int64_t n, int k, const PatternFreeRequest& request);

}  // namespace shiftlab
