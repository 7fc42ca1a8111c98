#include "shiftlab/expsum.hpp"

#include <cmath>
#include <numeric>

namespace shiftlab {

ExpSumSpec ExpSumSpec::make(std::int64_t ambient, std::int64_t modulus, int degree) {
  if (ambient < 1) throw std::domain_error("ExpSumSpec: ambient length must be positive");
  if (modulus < 1) throw std::domain_error("ExpSumSpec: modulus must be positive");
  if (degree < 1) throw std::domain_error("ExpSumSpec: degree must be positive");
  return ExpSumSpec{ambient, modulus, degree, integer_root(ambient, degree)};
}

RationalFrequency RationalFrequency::make(std::int64_t numerator, std::int64_t denominator, double offset) {
  if (denominator < 1) throw std::domain_error("RationalFrequency: denominator must be positive");
  if (std::gcd(mod_floor(numerator, denominator), denominator) != 1) {
    throw std::domain_error("RationalFrequency: gcd(a, q) != 1");
  }
  if (!(std::abs(offset) <= 0.5)) throw std::domain_error("RationalFrequency: |beta| > 1/2");
  return RationalFrequency{numerator, denominator, offset};
}

double FrequencyGrid::mean_square() const {
  CompensatedSum<double> acc;
  for (Eigen::Index j = 0; j < values.size(); ++j) acc += std::norm(values(j));
  return acc.value() / static_cast<double>(values.size());
}

Eigen::VectorXd shifted_prime_weights(const LambdaTable& table, const ExpSumSpec& spec) {
  const std::int64_t m = spec.root_bound;
  if (m >= 1 && spec.modulus * m + 1 > table.limit()) {
    throw std::out_of_range("S_d: d M + 1 exceeds table limit");
  }
  const double density = static_cast<double>(euler_phi(spec.modulus)) / static_cast<double>(spec.modulus);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(m);
  for (std::int64_t y = 1; y <= m; ++y) {
    const double lam = table(spec.modulus * y + 1);
    if (lam == 0.0) continue;
    w(y - 1) = density * spec.degree * std::pow(static_cast<double>(y), spec.degree - 1) * lam;
  }
  return w;
}

ComplexValue s_d_point(const LambdaTable& table, const ExpSumSpec& spec, double alpha) {
  const Eigen::VectorXd w = shifted_prime_weights(table, spec);
  ComplexSum acc;
  for (std::int64_t y = 1; y <= spec.root_bound; ++y) {
    const double wy = w(y - 1);
    if (wy == 0.0) continue;
    const long double power = static_cast<long double>(checked_pow(y, spec.degree));
    acc += wy * unit_phase(power * static_cast<long double>(alpha));
  }
  return acc.value();
}

ComplexValue s_d_point(const LambdaTable& table, const ExpSumSpec& spec, const RationalFrequency& alpha) {
  const Eigen::VectorXd w = shifted_prime_weights(table, spec);
  const std::int64_t q = alpha.denominator;
  const std::int64_t a = mod_floor(alpha.numerator, q);
  ComplexSum acc;
  for (std::int64_t y = 1; y <= spec.root_bound; ++y) {
    const double wy = w(y - 1);
    if (wy == 0.0) continue;
    const std::int64_t power = checked_pow(y, spec.degree);
    const std::int64_t residue = static_cast<std::int64_t>(static_cast<__int128>(a) * (power % q) % q);
    const long double phase = static_cast<long double>(residue) / static_cast<long double>(q) +
                              static_cast<long double>(alpha.offset) * static_cast<long double>(power);
    acc += wy * unit_phase(phase);
  }
  return acc.value();
}

FrequencyGrid power_weight_grid(const Eigen::VectorXd& weights, int degree, std::int64_t grid_size,
                                std::size_t memory_ceiling) {
  if (grid_size < 1) throw std::domain_error("grid: size must be positive");
  require_within_ceiling(3 * static_cast<std::size_t>(grid_size), memory_ceiling, "frequency grid");
  Eigen::VectorXd placed = Eigen::VectorXd::Zero(grid_size);
  std::int64_t support = 0;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (weights(i) == 0.0) continue;
    const std::int64_t power = checked_pow(i + 1, degree);
    placed(power % grid_size) += weights(i);
    support = std::max(support, power);
  }
  return FrequencyGrid{positive_transform(placed), support};
}

FrequencyGrid s_d_grid(const LambdaTable& table, const ExpSumSpec& spec, std::int64_t grid_size,
                       std::size_t memory_ceiling) {
  return power_weight_grid(shifted_prime_weights(table, spec), spec.degree, grid_size, memory_ceiling);
}

FrequencyGrid nu_hat_grid(const WeightedSequence& seq, std::int64_t grid_size, bool allow_wraparound,
                          std::size_t memory_ceiling) {
  if (grid_size < 1) throw std::domain_error("grid: size must be positive");
  if (seq.length() > grid_size && !allow_wraparound) {
    throw std::invalid_argument("nu_hat_grid: sequence longer than grid; pass allow_wraparound");
  }
  require_within_ceiling(3 * static_cast<std::size_t>(grid_size), memory_ceiling, "frequency grid");
  Eigen::VectorXd placed = Eigen::VectorXd::Zero(grid_size);
  for (std::int64_t x = 1; x <= seq.length(); ++x) placed(x % grid_size) += seq.values(x - 1);
  return FrequencyGrid{positive_transform(placed), seq.length()};
}

}  // namespace shiftlab
