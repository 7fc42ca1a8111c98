#pragma once

// Core numeric layer: error types, exact integer helpers, compensated
// summation, unit roots and the discrete transform used everywhere else.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shiftlab {

using Complex = std::complex<double>;
using ComplexValue = Complex;
using ComplexVector = Eigen::VectorXcd;

/// Default ceiling on the number of 8-byte entries any single table may hold.
inline constexpr std::size_t kDefaultMemoryCeiling = 100'000'000;

/// Thrown when a request would exceed the configured memory ceiling.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown for inputs that are well-formed but carry no usable mass.
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

void require_within_ceiling(std::size_t entries, std::size_t ceiling, const std::string& what);

// ---------------------------------------------------------------------------
// Integer arithmetic
// ---------------------------------------------------------------------------

std::int64_t euler_phi(std::int64_t n);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

bool is_prime_trial(std::int64_t n);

/// (base^exp) mod m for m >= 1, with base reduced into [0, m).
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m);

/// Non-negative residue of a modulo m.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// base^k, throwing std::overflow_error when the result leaves int64.
std::int64_t checked_pow(std::int64_t base, int k);

/// Largest m >= 0 with m^k <= n, found by integer binary search.
std::int64_t integer_root(std::int64_t n, int k);

/// Smallest power of two strictly greater than resolution.
std::int64_t suggest_grid_size(std::int64_t resolution);

// ---------------------------------------------------------------------------
// Summation and unit roots
// ---------------------------------------------------------------------------

/// Neumaier-compensated accumulator.
template <typename Scalar>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(Scalar x) {
    const Scalar t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  Scalar value() const { return sum_ + carry_; }

 private:
  Scalar sum_{0};
  Scalar carry_{0};
};

/// Compensated complex accumulator (real and imaginary parts separately).
class ComplexSum {
 public:
  ComplexSum& operator+=(Complex z) {
    re_ += z.real();
    im_ += z.imag();
    return *this;
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<double> re_;
  CompensatedSum<double> im_;
};

template <typename Derived>
typename Derived::Scalar compensated_total(const Eigen::DenseBase<Derived>& v) {
  CompensatedSum<typename Derived::Scalar> acc;
  for (Eigen::Index i = 0; i < v.size(); ++i) acc += v(i);
  return acc.value();
}

/// e(t) = exp(2 pi i t), with t reduced modulo 1 before evaluation.
Complex unit_phase(long double t);

/// Table of e(j/q), j = 0..q-1, generated by repeated multiplication and
/// re-seeded from the exact value every 2^16 steps.
class UnitRoots {
 public:
  explicit UnitRoots(std::int64_t modulus);
  std::int64_t modulus() const { return static_cast<std::int64_t>(roots_.size()); }
  const Complex& operator[](std::int64_t j) const { return roots_[static_cast<std::size_t>(j)]; }

 private:
  std::vector<Complex> roots_;
};

// ---------------------------------------------------------------------------
// Transform
// ---------------------------------------------------------------------------

/// values[j] = sum_n weights[n] e(n j / N), N = weights.size().
ComplexVector positive_transform(const Eigen::VectorXd& weights);
ComplexVector positive_transform(const ComplexVector& weights);

/// Inverse of positive_transform: out[n] = (1/N) sum_j values[j] e(-n j / N).
ComplexVector inverse_positive_transform(const ComplexVector& values);

/// Closed form of the integral of e(beta t) over [lo, hi].
Complex phase_integral(double beta, double lo, double hi);

}  // namespace shiftlab
