#pragma once

// Moments of power-weighted exponential sums: exact solution counts by
// meet-in-the-middle, grid moments, restriction ratios and large spectra.

#include "shiftlab/expsum.hpp"
#include "shiftlab/sieve.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace shiftlab {

enum class MomentWeighting { unweighted, shifted_prime };

struct MomentSpec {
  int half_order = 1;           // s
  int degree = 1;               // k
  std::int64_t root_bound = 1;  // M
  MomentWeighting weighting = MomentWeighting::unweighted;
  std::int64_t modulus = 1;     // d, used by the shifted-prime weighting

  /// Throws if 2 s M^k does not fit in int64.
  void validate() const;
};

/// Weights w(y), y = 1..M (index y - 1). Table needed only for shifted_prime.
Eigen::VectorXd moment_weights(const LambdaTable* table, const MomentSpec& spec);

/// sum over y_1^k+...+y_s^k = y_{s+1}^k+...+y_{2s}^k of prod w(y_i).
double moment_exact(const Eigen::VectorXd& weights, int half_order, int degree,
                    std::size_t memory_ceiling = kDefaultMemoryCeiling);
double moment_exact(const LambdaTable* table, const MomentSpec& spec,
                    std::size_t memory_ceiling = kDefaultMemoryCeiling);

struct GridMoment {
  double value = 0;
  /// grid size > order * support degree; the grid average is then the exact moment.
  bool exact = false;
};

/// (1/N) sum_j |values[j]|^order.
GridMoment moment_grid(const FrequencyGrid& grid, int order);

/// Number of 2s-tuples in [M] with equal power sums for every degree 1..k.
std::int64_t vinogradov_count(int half_order, int degree, std::int64_t root_bound,
                              std::size_t memory_ceiling = kDefaultMemoryCeiling);

/// ((1/N) sum_j |values[j]|^p) / scale^(p - 1), p > 2.
double restriction_ratio(const FrequencyGrid& grid, double p, std::int64_t scale);

struct SpectrumReport {
  double eta = 0;
  std::int64_t count = 0;
  double measure_estimate = 0;
  double normalized = 0;
};

/// Grid points with |value| >= eta * peak; normalized = count * eta^exponent.
SpectrumReport large_spectrum(const FrequencyGrid& grid, double eta, double peak, double normalization_exponent);

/// Exponent k(k+1) + 2 used for the S_d spectrum.
inline double spectrum_exponent(int degree) { return static_cast<double>(degree * (degree + 1) + 2); }

}  // namespace shiftlab
