#pragma once

// Density-increment engine: balanced functions on a + q^k [N'], mass on
// major-arc boxes, translate search against q'[X], sub-progression
// extraction and the iteration over nested progressions.

#include "shiftlab/arcs.hpp"
#include "shiftlab/patterns.hpp"
#include "shiftlab/sieve.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace shiftlab {

/// f = Lambda_{a,q^k} 1_A - delta Lambda_{a,q^k} on [N'].
struct BalancedFunction {
  WeightedSequence sequence;
  WeightedSequence majorant;  // Lambda_{a,q^k}
  double density = 0;         // delta
  PatternFrame frame;
};

BalancedFunction balanced_function(const LambdaTable& table, const PrimeSubset& set, const PatternFrame& frame);

/// Lambda-weighted density of the set inside prog, in ambient coordinates.
double relative_density(const LambdaTable& table, const PrimeSubset& set, const Progression& prog);

struct MassReport {
  std::int64_t best_q = 1;
  double mass = 0;
  double normalized_mass = 0;
  std::vector<double> per_q_mass;  // index q - 1
  std::int64_t grid_size = 0;
};

/// Grid estimate of the integral of |f^|^2 over each box family M(q), q <= q_max.
MassReport mass_concentration(const BalancedFunction& f, std::int64_t grid_size, std::int64_t q_max,
                              const ArcParameters& arcs);

/// X = ceil(N' / (2 pi Q)).
std::int64_t translate_length(std::int64_t ambient, std::int64_t cutoff);

struct TranslateReport {
  std::int64_t x = 1;          // best translate, local coordinate
  double value = 0;            // f * 1_{-P}(x) = sum of f over x + P
  Progression subprog;         // local coordinates: members of [N']
  double subprog_sum = 0;      // sum of f over subprog
  std::int64_t length = 0;     // X of P = q [X]
};

/// Maximizes sum_{y in x + qP} f(y) over translates with x + q[X] inside [N'],
/// then picks the best of the q^(k-1) residue sub-progressions of step q^k.
TranslateReport find_translate(const BalancedFunction& f, std::int64_t q, const ArcParameters& arcs,
                               const LambdaTable& table);

struct IncrementLimits {
  double a_exponent = 2.0;         // (q q')^k must stay <= (log N)^a_exponent
  std::int64_t min_length = 16;
  std::int64_t q_max = 8;
  std::int64_t cutoff = 0;         // arc cutoff Q; 0 means q_max
  double width_constant = 1.0;
  int max_steps = 50;
  std::int64_t grid_size = 0;      // 0 means smallest power of two above 4 N'
};

enum class OutcomeKind {
  patterns_found,
  common_difference_too_large,
  length_too_small,
  subprogression_found,
  no_gain,
  degenerate,
};

std::string to_string(OutcomeKind kind);

struct IncrementOutcome {
  OutcomeKind kind = OutcomeKind::degenerate;
  PatternCount patterns;            // patterns_found
  PatternFrame next;                // subprogression_found, ambient coordinates
  double input_density = 0;
  double new_density = 0;
  double gain = 0;
  std::int64_t chosen_modulus = 1;  // q'
  std::int64_t proposed_length = 0;
  std::int64_t proposed_root_step = 1;
};

IncrementOutcome increment_step(const LambdaTable& table, const PrimeSubset& set, const PatternFrame& frame,
                                const IncrementLimits& limits);

struct TraceStep {
  OutcomeKind outcome;
  double density;           // delta_i on the progression entering the step
  std::int64_t root_step;   // q_i
  std::int64_t length;      // X_i
  Progression prog;
  double gain = 0;
};

struct IncrementTrace {
  std::vector<TraceStep> steps;
  OutcomeKind stop_reason = OutcomeKind::degenerate;
  bool hit_step_limit = false;
  double final_density = 0;
};

IncrementTrace increment_iterate(const LambdaTable& table, const PrimeSubset& set, std::int64_t n, int k,
                                 const IncrementLimits& limits);

}  // namespace shiftlab
