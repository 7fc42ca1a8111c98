#pragma once

// Major/minor arc decomposition of the circle, the main-term models on
// major arcs, and seeded measurement of minor-arc suprema.

#include "shiftlab/expsum.hpp"
#include "shiftlab/gauss.hpp"
#include "shiftlab/sieve.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace shiftlab {

/// Major arcs are the boxes |alpha - a/q| <= width * Q / (q N'), q <= Q.
struct ArcParameters {
  std::int64_t ambient = 1;  // N'
  std::int64_t cutoff = 1;   // Q
  double width_constant = 1.0;

  static ArcParameters make(std::int64_t ambient, std::int64_t cutoff, double width_constant = 1.0);
  /// ceil((log N')^2), clipped into [1, N'].
  static std::int64_t default_cutoff(std::int64_t ambient);

  /// Half-width of the box around a/q.
  double half_width(std::int64_t q) const {
    return width_constant * static_cast<double>(cutoff) / (static_cast<double>(q) * static_cast<double>(ambient));
  }
  /// Boxes for distinct fractions with denominators <= Q are disjoint.
  bool arcs_disjoint() const;
};

struct ArcClassification {
  std::optional<RationalFrequency> major;  // empty on the minor arcs

  bool is_major() const { return major.has_value(); }
};

/// Convergent denominators/numerators of alpha's continued fraction, up to q_max.
std::vector<RationalFrequency> convergents(double alpha, std::int64_t q_max);

ArcClassification classify(const ArcParameters& params, double alpha);

/// I(beta) = integral of e(beta t) over [1, upper].
ComplexValue singular_integral(double beta, double upper);

/// (phi(d)/phi(dq)) C(q; a, d) I(beta), C with (t, b) = (d, 1) and I over [1, M^k].
ComplexValue major_model_sd(const ExpSumSpec& spec, const RationalFrequency& freq);

/// (phi(d)/phi(dq)) sum_{r mod q, (b + r d, q) = 1} e(a r / q) I(beta), I over [1, X].
ComplexValue major_model_lambda(std::int64_t b, std::int64_t d, std::int64_t length, const RationalFrequency& freq);

/// Thrown when every sampled frequency is major.
class EmptyMinorArcs : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct MinorScanReport {
  double sup_abs = 0;
  double arg_max = 0;
  double ratio_to_peak = 0;
  double peak = 0;
  std::int64_t samples = 0;
  std::int64_t attempts = 0;
};

/// Samples frac(seed_phase + n * golden) filtered to the minor arcs.
MinorScanReport minor_sup_scan(const LambdaTable& table, const ExpSumSpec& spec, const ArcParameters& params,
                               std::int64_t sample_count, std::int64_t seed);

}  // namespace shiftlab
