#include "shiftlab/gauss.hpp"

#include <cmath>
#include <numeric>

namespace shiftlab {

void CompleteSumSpec::validate() const {
  if (modulus < 1) throw std::domain_error("complete sum: modulus must be positive");
  if (degree < 1) throw std::domain_error("complete sum: degree must be positive");
  if (linear_coeff < 1) throw std::domain_error("complete sum: linear coefficient must be positive");
  if (std::gcd(mod_floor(numerator, modulus), modulus) != 1) {
    throw std::domain_error("complete sum: gcd(numerator, modulus) != 1");
  }
  if (std::gcd(linear_shift, linear_coeff) != 1) {
    throw std::domain_error("complete sum: gcd(linear_shift, linear_coeff) != 1");
  }
}

namespace {

// Sum over r mod q of e(a r^k / q), restricted to r with (t r + b) not
// divisible by any prime in `primes`. No invariants on (a, t, b) assumed.
Complex constrained_sum(std::int64_t q, std::int64_t a, int k, std::int64_t t, std::int64_t b,
                        const std::vector<std::int64_t>& primes) {
  if (q > kDirectSumLimit) throw ResourceError("complete sum: modulus exceeds direct-loop limit");
  const UnitRoots roots(q);
  const std::int64_t a_mod = mod_floor(a, q);
  ComplexSum acc;
  for (std::int64_t r = 0; r < q; ++r) {
    const std::int64_t lin = t * r + b;
    bool admissible = true;
    for (const std::int64_t p : primes) {
      if (mod_floor(lin, p) == 0) {
        admissible = false;
        break;
      }
    }
    if (!admissible) continue;
    std::int64_t power = 1 % q;
    for (int i = 0; i < k; ++i) power = power * r % q;
    const std::int64_t index = static_cast<std::int64_t>(static_cast<__int128>(a_mod) * power % q);
    acc += roots[index];
  }
  return acc.value();
}

std::vector<std::int64_t> prime_divisors(std::int64_t q) {
  std::vector<std::int64_t> out;
  for (const auto& [p, e] : factorize(q)) out.push_back(p);
  return out;
}

}  // namespace

ComplexValue complete_sum_direct(const CompleteSumSpec& spec) {
  spec.validate();
  return constrained_sum(spec.modulus, spec.numerator, spec.degree, spec.linear_coeff, spec.linear_shift,
                         prime_divisors(spec.modulus));
}

ComplexValue complete_sum_factored(const CompleteSumSpec& spec) {
  spec.validate();
  const std::int64_t q = spec.modulus;
  Complex product{1.0, 0.0};
  for (const auto& [p, e] : factorize(q)) {
    const std::int64_t qi = checked_pow(p, e);
    const std::int64_t cofactor = q / qi;
    // r = r_i * cofactor + (terms vanishing mod q_i), so r^k / q contributes
    // a * cofactor^(k-1) * r_i^k / q_i and (t r + b) = t cofactor r_i + b mod q_i.
    const std::int64_t numerator = static_cast<std::int64_t>(
        static_cast<__int128>(mod_floor(spec.numerator, qi)) * mod_pow(cofactor, spec.degree - 1, qi) % qi);
    const std::int64_t coeff =
        static_cast<std::int64_t>(static_cast<__int128>(spec.linear_coeff % qi) * (cofactor % qi) % qi);
    product *= constrained_sum(qi, numerator, spec.degree, coeff, spec.linear_shift, {p});
  }
  return product;
}

ComplexValue weyl_sum(std::int64_t q, std::int64_t a, int k) {
  if (q < 1 || k < 1) throw std::domain_error("weyl_sum: modulus and degree must be positive");
  return constrained_sum(q, a, k, 1, 0, {});
}

double bound_ratio(const CompleteSumSpec& spec, double epsilon) {
  if (epsilon < 0) throw std::domain_error("bound_ratio: epsilon must be >= 0");
  const double value = std::abs(complete_sum_factored(spec));
  const double exponent = 1.0 - 1.0 / static_cast<double>(spec.degree) + epsilon;
  return value / std::pow(static_cast<double>(spec.modulus), exponent);
}

BoundSweep sweep_bound_ratio(std::int64_t q_max, int k, double epsilon) {
  BoundSweep sweep;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const double ratio = bound_ratio(CompleteSumSpec{q, 1, k, 1, 1}, epsilon);
    if (ratio > sweep.worst_ratio) {
      sweep.worst_ratio = ratio;
      sweep.worst_modulus = q;
    }
  }
  return sweep;
}

}  // namespace shiftlab
