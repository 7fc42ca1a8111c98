#include "shiftlab/sieve.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace shiftlab {

LambdaTable LambdaTable::build(std::int64_t limit, std::size_t memory_ceiling) {
  if (limit < 1) throw std::domain_error("build_lambda_table: limit must be >= 1");
  require_within_ceiling(static_cast<std::size_t>(limit) + 1, memory_ceiling, "build_lambda_table");

  LambdaTable table;
  table.limit_ = limit;
  const auto size = static_cast<std::size_t>(limit) + 1;
  table.values_.assign(size, 0.0);
  table.spf_.assign(size, 0);

  for (std::int64_t n = 2; n <= limit; ++n) {
    if (table.spf_[static_cast<std::size_t>(n)] == 0) {
      table.spf_[static_cast<std::size_t>(n)] = static_cast<std::uint32_t>(n);
      table.primes_.push_back(n);
    }
    const std::int64_t spf_n = table.spf_[static_cast<std::size_t>(n)];
    for (const std::int64_t p : table.primes_) {
      if (p > spf_n || p * n > limit) break;
      table.spf_[static_cast<std::size_t>(p * n)] = static_cast<std::uint32_t>(p);
    }
  }

  for (const std::int64_t p : table.primes_) {
    const double log_p = std::log(static_cast<double>(p));
    for (std::int64_t power = p; power <= limit; power *= p) {
      table.values_[static_cast<std::size_t>(power)] = log_p;
      if (power > limit / p) break;
    }
  }
  return table;
}

std::int64_t LambdaTable::smallest_prime_factor(std::int64_t n) const {
  if (n < 2 || n > limit_) throw std::out_of_range("smallest_prime_factor: n outside [2, limit]");
  return spf_[static_cast<std::size_t>(n)];
}

bool LambdaTable::is_prime(std::int64_t n) const {
  if (n < 2) return false;
  if (n > limit_) throw std::out_of_range("is_prime: n exceeds table limit");
  return spf_[static_cast<std::size_t>(n)] == n;
}

Progression Progression::make(std::int64_t offset, std::int64_t step, std::int64_t length, std::int64_t ambient,
                              bool reduced) {
  if (step < 1) throw std::domain_error("Progression: step must be >= 1");
  if (offset + step < 1) throw std::domain_error("Progression: first member must be >= 1");
  if (length < 0) throw std::domain_error("Progression: length must be >= 0");
  if (offset + step * length > ambient) throw std::out_of_range("Progression: not contained in [ambient]");
  if (reduced && std::gcd(offset, step) != 1) {
    throw std::domain_error("Progression: gcd(offset, step) != 1 for a reduced progression");
  }
  return Progression{offset, step, length, ambient, reduced};
}

bool Progression::contains(std::int64_t n) const {
  if (length == 0 || n <= offset || n > last()) return false;
  return (n - offset) % step == 0;
}

bool Progression::subset_of(const Progression& parent) const {
  if (length == 0) return true;
  if (!parent.contains(member(1))) return false;
  if (length == 1) return true;
  return step % parent.step == 0 && parent.contains(last());
}

double psi_range(const LambdaTable& table, std::int64_t lo, std::int64_t hi, std::int64_t q, std::int64_t a) {
  if (q < 1) throw std::domain_error("psi: modulus must be positive");
  if (hi > table.limit()) throw std::out_of_range("psi: x exceeds table limit");
  if (hi <= lo) return 0.0;
  const std::int64_t start_floor = std::max<std::int64_t>(lo, 0);
  // first n > start_floor with n = a (mod q)
  std::int64_t n = start_floor + 1 + mod_floor(a - (start_floor + 1), q);
  CompensatedSum<double> acc;
  for (; n <= hi; n += q) acc += table(n);
  return acc.value();
}

double psi(const LambdaTable& table, double x, std::int64_t q, std::int64_t a) {
  if (x > static_cast<double>(table.limit())) throw std::out_of_range("psi: x exceeds table limit");
  if (x < 1.0) return 0.0;
  return psi_range(table, 0, static_cast<std::int64_t>(std::floor(x)), q, a);
}

WeightedSequence lambda_progression(const LambdaTable& table, std::int64_t b, std::int64_t d, std::int64_t length) {
  if (d < 1) throw std::domain_error("lambda_progression: d must be positive");
  if (length < 1) throw std::domain_error("lambda_progression: X must be positive");
  if (std::gcd(b, d) != 1) throw std::domain_error("lambda_progression: gcd(b, d) != 1");
  if (b < 0 || b > table.limit() - d * length) throw std::out_of_range("lambda_progression: b + dX exceeds table");
  const double density = static_cast<double>(euler_phi(d)) / static_cast<double>(d);
  WeightedSequence seq;
  seq.kind = SequenceKind::majorant;
  seq.values.resize(length);
  for (std::int64_t x = 1; x <= length; ++x) seq.values(x - 1) = density * table(b + d * x);
  return seq;
}

SiegelWalfiszReport check_siegel_walfisz(const LambdaTable& table, double x, std::int64_t q, std::int64_t a) {
  if (q < 1 || std::gcd(mod_floor(a, q), q) != 1) throw std::domain_error("check_siegel_walfisz: gcd(a, q) != 1");
  SiegelWalfiszReport report;
  report.measured = psi(table, x, q, a);
  report.main_term = x / static_cast<double>(euler_phi(q));
  report.relative_error = std::abs(report.measured - report.main_term) / report.main_term;
  return report;
}

ShortProgressionReport check_short_ap(const LambdaTable& table, std::int64_t x, std::int64_t h, std::int64_t q,
                                      std::int64_t a) {
  if (q < 1 || std::gcd(mod_floor(a, q), q) != 1) throw std::domain_error("check_short_ap: gcd(a, q) != 1");
  if (h < 0) throw std::domain_error("check_short_ap: h must be >= 0");
  if (x + h > table.limit()) throw std::out_of_range("check_short_ap: x + h exceeds table limit");
  ShortProgressionReport report;
  const double phi_q = static_cast<double>(euler_phi(q));
  report.sum = psi_range(table, x, x + h, q, a);
  report.lower = 0.99 * static_cast<double>(h) / phi_q;
  report.upper = 1.01 * static_cast<double>(h) / phi_q;
  report.within = report.lower < report.sum && report.sum < report.upper;
  report.in_expected_range = x >= 1 && static_cast<double>(h) >= std::pow(static_cast<double>(x), 0.6);
  return report;
}

}  // namespace shiftlab
