#include "shiftlab/increment.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace shiftlab {

std::string to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::patterns_found: return "patterns_found";
    case OutcomeKind::common_difference_too_large: return "common_difference_too_large";
    case OutcomeKind::length_too_small: return "length_too_small";
    case OutcomeKind::subprogression_found: return "subprogression_found";
    case OutcomeKind::no_gain: return "no_gain";
    case OutcomeKind::degenerate: return "degenerate";
  }
  return "unknown";
}

double relative_density(const LambdaTable& table, const PrimeSubset& set, const Progression& prog) {
  CompensatedSum<double> in_set;
  CompensatedSum<double> total;
  for (std::int64_t x = 1; x <= prog.length; ++x) {
    const std::int64_t n = prog.member(x);
    const double lam = table(n);
    if (lam == 0.0) continue;
    total += lam;
    if (set.contains(n)) in_set += lam;
  }
  if (total.value() <= 0.0) throw DegenerateInput("relative_density: progression carries no Lambda mass");
  return in_set.value() / total.value();
}

BalancedFunction balanced_function(const LambdaTable& table, const PrimeSubset& set, const PatternFrame& frame) {
  const Progression& prog = frame.prog;
  if (prog.last() > table.limit()) throw std::out_of_range("balanced_function: progression exceeds table");
  const double density_factor =
      static_cast<double>(euler_phi(frame.root_step)) / static_cast<double>(frame.root_step);

  BalancedFunction f{WeightedSequence{Eigen::VectorXd::Zero(prog.length), SequenceKind::balanced},
                     WeightedSequence{Eigen::VectorXd::Zero(prog.length), SequenceKind::majorant}, 0.0, frame};
  Eigen::VectorXd indicator_part = Eigen::VectorXd::Zero(prog.length);
  CompensatedSum<double> in_set;
  CompensatedSum<double> total;
  for (std::int64_t x = 1; x <= prog.length; ++x) {
    const std::int64_t n = prog.member(x);
    const double weight = density_factor * table(n);
    f.majorant.values(x - 1) = weight;
    total += weight;
    if (weight != 0.0 && set.contains(n)) {
      indicator_part(x - 1) = weight;
      in_set += weight;
    }
  }
  if (total.value() <= 0.0) throw DegenerateInput("balanced_function: progression carries no Lambda mass");
  f.density = in_set.value() / total.value();
  f.sequence.values = indicator_part - f.density * f.majorant.values;
  return f;
}

MassReport mass_concentration(const BalancedFunction& f, std::int64_t grid_size, std::int64_t q_max,
                              const ArcParameters& arcs) {
  if (q_max < 1) throw std::domain_error("mass_concentration: q_max must be >= 1");
  const std::int64_t length = f.sequence.length();
  if (grid_size <= 0) grid_size = suggest_grid_size(4 * length);
  const FrequencyGrid grid = nu_hat_grid(f.sequence, grid_size);

  MassReport report;
  report.grid_size = grid_size;
  report.per_q_mass.assign(static_cast<std::size_t>(q_max), 0.0);
  const long double n_bar = static_cast<long double>(grid_size);
  double best = 0.0;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const long double half = arcs.half_width(q);
    CompensatedSum<double> mass;
    for (std::int64_t a = 0; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const long double centre = static_cast<long double>(a) / static_cast<long double>(q);
      auto lo = static_cast<std::int64_t>(std::ceil((centre - half) * n_bar));
      auto hi = static_cast<std::int64_t>(std::floor((centre + half) * n_bar));
      if (hi - lo + 1 > grid_size) hi = lo + grid_size - 1;
      for (std::int64_t j = lo; j <= hi; ++j) mass += std::norm(grid.values(mod_floor(j, grid_size)));
    }
    const double value = mass.value() / static_cast<double>(grid_size);
    report.per_q_mass[static_cast<std::size_t>(q - 1)] = value;
    if (value > best) {
      best = value;
      report.best_q = q;
    }
  }
  report.mass = report.per_q_mass[static_cast<std::size_t>(report.best_q - 1)];
  report.normalized_mass = length > 0 ? report.mass / static_cast<double>(length) : 0.0;
  return report;
}

std::int64_t translate_length(std::int64_t ambient, std::int64_t cutoff) {
  const double raw = static_cast<double>(ambient) / (2.0 * std::numbers::pi * static_cast<double>(cutoff));
  return static_cast<std::int64_t>(std::ceil(raw));
}

TranslateReport find_translate(const BalancedFunction& f, std::int64_t q, const ArcParameters& arcs,
                               const LambdaTable& table) {
  (void)table;
  if (q < 1) throw std::domain_error("find_translate: modulus must be positive");
  const std::int64_t length = f.sequence.length();
  const std::int64_t x_len = translate_length(length, arcs.cutoff);
  if (x_len < 1) throw DegenerateInput("find_translate: progression length X < 1");
  const std::int64_t last_translate = length - q * x_len;
  if (last_translate < 1) throw DegenerateInput("find_translate: q [X] does not fit inside [N']");

  const Progression& base = f.frame.prog;
  const int k = f.frame.degree;
  // Translates whose sub-progressions are coprime to q q' in ambient coordinates.
  auto admissible = [&](std::int64_t x) { return std::gcd(mod_floor(base.member(x), q), q) == 1; };

  const std::int64_t grid_size = suggest_grid_size(2 * length);
  Eigen::VectorXd indicator = Eigen::VectorXd::Zero(grid_size);
  for (std::int64_t i = 1; i <= x_len; ++i) indicator(q * i) = 1.0;
  const FrequencyGrid f_hat = nu_hat_grid(f.sequence, grid_size);
  const ComplexVector p_hat = positive_transform(indicator);
  const ComplexVector correlation = inverse_positive_transform(
      (f_hat.values.array() * p_hat.array().conjugate()).matrix());

  double best = -std::numeric_limits<double>::infinity();
  for (std::int64_t x = 1; x <= last_translate; ++x) {
    if (admissible(x)) best = std::max(best, correlation(x).real());
  }
  if (!std::isfinite(best)) throw DegenerateInput("find_translate: no translate is coprime to the modulus");
  const double tolerance = 1e-10 * (1.0 + f.sequence.values.cwiseAbs().sum());

  TranslateReport report;
  report.length = x_len;
  for (std::int64_t x = 1; x <= last_translate; ++x) {
    if (admissible(x) && correlation(x).real() >= best - tolerance) {
      report.x = x;
      break;
    }
  }
  CompensatedSum<double> direct;
  for (std::int64_t i = 1; i <= x_len; ++i) direct += f.sequence.at(report.x + q * i);
  report.value = direct.value();

  // Split x + q [X] by i mod q^(k-1) into progressions of step q^k.
  const std::int64_t classes = checked_pow(q, k - 1);
  const std::int64_t sub_step = classes * q;
  double best_sum = -std::numeric_limits<double>::infinity();
  for (std::int64_t r = 1; r <= std::min(classes, x_len); ++r) {
    const std::int64_t sub_len = (x_len - r) / classes + 1;
    const std::int64_t offset = report.x + q * r - sub_step;
    CompensatedSum<double> sum;
    for (std::int64_t j = 1; j <= sub_len; ++j) sum += f.sequence.at(offset + sub_step * j);
    if (sum.value() > best_sum + tolerance) {
      best_sum = sum.value();
      report.subprog = Progression::make(offset, sub_step, sub_len, length, false);
      report.subprog_sum = sum.value();
    }
  }
  return report;
}

IncrementOutcome increment_step(const LambdaTable& table, const PrimeSubset& set, const PatternFrame& frame,
                                const IncrementLimits& limits) {
  IncrementOutcome out;
  const Progression& prog = frame.prog;
  if (prog.length < limits.min_length) {
    out.kind = OutcomeKind::length_too_small;
    out.proposed_length = prog.length;
    return out;
  }
  out.patterns = count_direct(table, set, frame);
  if (out.patterns.unweighted > 0) {
    out.kind = OutcomeKind::patterns_found;
    return out;
  }

  BalancedFunction f;
  try {
    f = balanced_function(table, set, frame);
  } catch (const DegenerateInput&) {
    out.kind = OutcomeKind::degenerate;
    return out;
  }
  out.input_density = f.density;
  if (f.density == 0.0) {
    out.kind = OutcomeKind::degenerate;
    return out;
  }

  const std::int64_t cutoff = std::min(limits.cutoff > 0 ? limits.cutoff : limits.q_max, prog.length);
  const ArcParameters arcs = ArcParameters::make(prog.length, cutoff, limits.width_constant);
  const MassReport mass = mass_concentration(f, limits.grid_size, limits.q_max, arcs);
  const std::int64_t q_new = mass.best_q;
  out.chosen_modulus = q_new;
  out.proposed_root_step = frame.root_step * q_new;

  const double log_n = std::log(static_cast<double>(prog.ambient));
  const double step_cap = std::pow(log_n, limits.a_exponent);
  if (std::pow(static_cast<double>(out.proposed_root_step), frame.degree) > step_cap) {
    out.kind = OutcomeKind::common_difference_too_large;
    return out;
  }

  TranslateReport translate;
  try {
    translate = find_translate(f, q_new, arcs, table);
  } catch (const DegenerateInput&) {
    out.kind = OutcomeKind::length_too_small;
    return out;
  }
  out.proposed_length = translate.subprog.length;
  if (translate.subprog.length < limits.min_length) {
    out.kind = OutcomeKind::length_too_small;
    return out;
  }

  const Progression next = Progression::make(prog.offset + prog.step * translate.subprog.offset,
                                             prog.step * translate.subprog.step, translate.subprog.length,
                                             prog.ambient, true);
  try {
    out.new_density = relative_density(table, set, next);
  } catch (const DegenerateInput&) {
    out.kind = OutcomeKind::no_gain;
    return out;
  }
  out.gain = out.new_density - out.input_density;
  if (!(out.gain > 0.0)) {
    out.kind = OutcomeKind::no_gain;
    return out;
  }
  out.kind = OutcomeKind::subprogression_found;
  out.next = PatternFrame::make(next, out.proposed_root_step, frame.degree);
  return out;
}

IncrementTrace increment_iterate(const LambdaTable& table, const PrimeSubset& set, std::int64_t n, int k,
                                 const IncrementLimits& limits) {
  IncrementTrace trace;
  PatternFrame frame = PatternFrame::make(Progression::interval(n), 1, k);
  for (int i = 0; i < limits.max_steps; ++i) {
    double density = 0.0;
    try {
      density = relative_density(table, set, frame.prog);
    } catch (const DegenerateInput&) {
    }
    const IncrementOutcome outcome = increment_step(table, set, frame, limits);
    trace.steps.push_back(TraceStep{outcome.kind, density, frame.root_step, frame.prog.length, frame.prog,
                                    outcome.gain});
    trace.stop_reason = outcome.kind;
    trace.final_density = outcome.kind == OutcomeKind::subprogression_found ? outcome.new_density : density;
    if (outcome.kind != OutcomeKind::subprogression_found) return trace;
    frame = outcome.next;
  }
  trace.hit_step_limit = true;
  return trace;
}

}  // namespace shiftlab
