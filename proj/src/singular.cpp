#include "shiftlab/singular.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace shiftlab {

namespace {

void require_local_inputs(std::int64_t p, std::int64_t q, std::int64_t a, int k) {
  if (q < 1 || k < 1) throw std::domain_error("local factor: q and k must be positive");
  if (std::gcd(mod_floor(a, q), q) != 1) throw std::domain_error("local factor: gcd(a, q) != 1");
  if (!is_prime_trial(p)) throw std::domain_error("local factor: p is not prime");
  if (q % p == 0) throw std::domain_error("local factor: p divides q (the factor is identically 1)");
}

}  // namespace

std::int64_t local_count_M(std::int64_t p, std::int64_t q, std::int64_t a, int k) {
  require_local_inputs(p, q, a, k);
  const std::int64_t q_inv = mod_pow(q, p - 2, p);
  const std::int64_t forbidden_linear = mod_floor(-a * q_inv % p, p);  // q x + a = 0
  const std::int64_t forbidden_power = mod_floor(-q_inv, p);           // q x + 1 = 0
  const std::int64_t doubled = 2 * forbidden_linear % p;
  // For fixed x3 the admissible (x1, x2) with x1 + x2 = c number p - 2,
  // plus one when c = 2 * forbidden_linear (the doubly excluded pair).
  std::int64_t count = 0;
  for (std::int64_t x3 = 0; x3 < p; ++x3) {
    if (x3 == forbidden_power) continue;
    const std::int64_t c = mod_floor(-mod_pow(x3, k, p), p);
    count += p - 2 + (c == doubled ? 1 : 0);
  }
  return count;
}

double local_factor_A(std::int64_t p, std::int64_t q, std::int64_t a, int k) {
  const std::int64_t m = local_count_M(p, q, a, k);
  const double phi = static_cast<double>(p - 1);
  return static_cast<double>(p) * static_cast<double>(m) / (phi * phi * phi) - 1.0;
}

namespace {

// phi(p)^3 A(p) by the defining sum, as a complex number. The three complete
// sums per b share one table of roots and one table of k-th power residues.
Complex scaled_A_sum(std::int64_t p, std::int64_t q, std::int64_t a, int k) {
  const UnitRoots roots(p);
  const std::int64_t q_mod = mod_floor(q, p);
  std::vector<std::int64_t> linear_support;
  std::vector<std::int64_t> power_support;
  for (std::int64_t x = 0; x < p; ++x) {
    if ((q_mod * x + mod_floor(a, p)) % p != 0) linear_support.push_back(x);
    if ((q_mod * x + 1) % p != 0) power_support.push_back(mod_pow(x, k, p));
  }
  ComplexSum acc;
  for (std::int64_t b = 1; b < p; ++b) {
    ComplexSum linear, power;
    for (const std::int64_t x : linear_support) linear += roots[b * x % p];
    for (const std::int64_t r : power_support) power += roots[b * r % p];
    acc += linear.value() * linear.value() * power.value();
  }
  return acc.value();
}

}  // namespace

double local_factor_A_sums(std::int64_t p, std::int64_t q, std::int64_t a, int k) {
  require_local_inputs(p, q, a, k);
  const double phi = static_cast<double>(p - 1);
  const Complex value = scaled_A_sum(p, q, a, k) / (phi * phi * phi);
  if (std::abs(value.imag()) > 1e-10) throw std::runtime_error("local_factor_A: imaginary part above 1e-10");
  return value.real();
}

LocalFactorReport local_factor_report(std::int64_t p, std::int64_t q, std::int64_t a, int k) {
  require_local_inputs(p, q, a, k);
  LocalFactorReport report;
  report.prime = p;
  report.m_count = local_count_M(p, q, a, k);
  report.a_value = local_factor_A(p, q, a, k);
  const double phi = static_cast<double>(p - 1);
  const double cube = phi * phi * phi;
  const Complex scaled = scaled_A_sum(p, q, a, k);
  report.a_from_sums = scaled.real() / cube;
  report.identity_residual =
      std::abs(static_cast<double>(p) * static_cast<double>(report.m_count) - (cube + scaled.real()));
  return report;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t n = 2; n <= limit; ++n) {
    if (composite[static_cast<std::size_t>(n)]) continue;
    out.push_back(n);
    for (std::int64_t m = n * n; m <= limit; m += n) composite[static_cast<std::size_t>(m)] = true;
  }
  return out;
}

SingularSeriesReport singular_series(std::int64_t q, std::int64_t a, int k, std::int64_t prime_limit) {
  if (q < 1 || k < 1) throw std::domain_error("singular_series: q and k must be positive");
  if (std::gcd(mod_floor(a, q), q) != 1) throw std::domain_error("singular_series: gcd(a, q) != 1");
  SingularSeriesReport report;
  report.q = q;
  report.a = a;
  report.k = k;
  report.prime_limit = prime_limit;

  std::vector<std::int64_t> used;
  std::vector<double> factors;
  for (const std::int64_t p : primes_up_to(prime_limit)) {
    if (q % p == 0) continue;  // A(p^t) = 0 when p | q
    used.push_back(p);
    factors.push_back(local_factor_A(p, q, a, k));
  }
  report.factors = static_cast<std::int64_t>(factors.size());
  double forward = 1.0;
  for (const double factor : factors) forward *= 1.0 + factor;
  double backward = 1.0;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) backward *= 1.0 + *it;
  report.partial_product = forward;
  report.reversed_product = backward;

  // Least-squares fit of log|A(p)| against log p over (P/10, P].
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i] * 10 <= prime_limit || factors[i] == 0.0) continue;
    const double x = std::log(static_cast<double>(used[i]));
    const double y = std::log(std::abs(factors[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n >= 2 && prime_limit >= 2) {
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    report.fitted_exponent = slope;
    const double limit = static_cast<double>(prime_limit);
    if (slope < -1.0) {
      report.tail_bound_estimate =
          std::exp(intercept) * std::pow(limit, slope + 1.0) / ((-slope - 1.0) * std::log(limit));
    } else {
      report.tail_bound_estimate = std::numeric_limits<double>::infinity();
    }
  }
  return report;
}

}  // namespace shiftlab
