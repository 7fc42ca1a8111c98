#include "shiftlab/moments.hpp"

#include <cmath>
#include <limits>
#include <map>

namespace shiftlab {

void MomentSpec::validate() const {
  if (half_order < 1 || degree < 1 || root_bound < 1 || modulus < 1) {
    throw std::domain_error("MomentSpec: s, k, M and d must be positive");
  }
  const std::int64_t top = checked_pow(root_bound, degree);
  if (top > std::numeric_limits<std::int64_t>::max() / (2 * half_order)) {
    throw std::overflow_error("MomentSpec: 2 s M^k exceeds int64");
  }
}

Eigen::VectorXd moment_weights(const LambdaTable* table, const MomentSpec& spec) {
  spec.validate();
  if (spec.weighting == MomentWeighting::unweighted) return Eigen::VectorXd::Ones(spec.root_bound);
  if (table == nullptr) throw std::invalid_argument("moment_weights: shifted-prime weighting needs a table");
  const ExpSumSpec sd{checked_pow(spec.root_bound, spec.degree), spec.modulus, spec.degree, spec.root_bound};
  return shifted_prime_weights(*table, sd);
}

double moment_exact(const Eigen::VectorXd& weights, int half_order, int degree, std::size_t memory_ceiling) {
  if (half_order < 1 || degree < 1) throw std::domain_error("moment_exact: s and k must be positive");
  const std::int64_t m = weights.size();
  if (m == 0) return 0.0;
  const std::int64_t top = checked_pow(m, degree);
  const std::int64_t span = half_order * top + 1;
  require_within_ceiling(2 * static_cast<std::size_t>(span), memory_ceiling, "moment_exact");

  std::vector<std::int64_t> powers(static_cast<std::size_t>(m));
  for (std::int64_t y = 1; y <= m; ++y) powers[static_cast<std::size_t>(y - 1)] = checked_pow(y, degree);

  // level[v] = sum over j-tuples with power sum v of the weight product.
  std::vector<double> level(static_cast<std::size_t>(span), 0.0);
  for (std::int64_t y = 0; y < m; ++y) level[static_cast<std::size_t>(powers[static_cast<std::size_t>(y)])] += weights(y);
  std::int64_t reach = top;
  for (int j = 2; j <= half_order; ++j) {
    std::vector<CompensatedSum<double>> next(static_cast<std::size_t>(span));
    for (std::int64_t v = 0; v <= reach; ++v) {
      const double base = level[static_cast<std::size_t>(v)];
      if (base == 0.0) continue;
      for (std::int64_t y = 0; y < m; ++y) {
        const double wy = weights(y);
        if (wy == 0.0) continue;
        next[static_cast<std::size_t>(v + powers[static_cast<std::size_t>(y)])] += base * wy;
      }
    }
    reach += top;
    for (std::int64_t v = 0; v <= reach; ++v) level[static_cast<std::size_t>(v)] = next[static_cast<std::size_t>(v)].value();
  }

  CompensatedSum<double> total;
  for (std::int64_t v = 0; v <= reach; ++v) {
    const double f = level[static_cast<std::size_t>(v)];
    total += f * f;
  }
  return total.value();
}

double moment_exact(const LambdaTable* table, const MomentSpec& spec, std::size_t memory_ceiling) {
  return moment_exact(moment_weights(table, spec), spec.half_order, spec.degree, memory_ceiling);
}

GridMoment moment_grid(const FrequencyGrid& grid, int order) {
  if (order < 2 || order % 2 != 0) throw std::domain_error("moment_grid: order must be a positive even integer");
  CompensatedSum<double> acc;
  const int half = order / 2;
  for (Eigen::Index j = 0; j < grid.values.size(); ++j) {
    const double sq = std::norm(grid.values(j));
    double term = 1.0;
    for (int i = 0; i < half; ++i) term *= sq;
    acc += term;
  }
  GridMoment out;
  out.value = acc.value() / static_cast<double>(grid.size());
  out.exact = grid.size() > static_cast<std::int64_t>(order) * grid.support_degree;
  return out;
}

std::int64_t vinogradov_count(int half_order, int degree, std::int64_t root_bound, std::size_t memory_ceiling) {
  if (half_order < 1 || degree < 1 || root_bound < 1) {
    throw std::domain_error("vinogradov_count: s, k and M must be positive");
  }
  const std::int64_t tuples = checked_pow(root_bound, half_order);
  require_within_ceiling(static_cast<std::size_t>(tuples) * static_cast<std::size_t>(degree), memory_ceiling,
                         "vinogradov_count");
  checked_pow(root_bound, degree);  // every power sum stays inside int64

  std::map<std::vector<std::int64_t>, std::int64_t> buckets;
  std::vector<std::int64_t> digits(static_cast<std::size_t>(half_order), 1);
  std::vector<std::int64_t> key(static_cast<std::size_t>(degree));
  for (std::int64_t t = 0; t < tuples; ++t) {
    std::fill(key.begin(), key.end(), 0);
    for (const std::int64_t y : digits) {
      std::int64_t power = 1;
      for (int j = 0; j < degree; ++j) {
        power *= y;
        key[static_cast<std::size_t>(j)] += power;
      }
    }
    ++buckets[key];
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] <= root_bound) break;
      digits[i] = 1;
    }
  }
  std::int64_t total = 0;
  for (const auto& [k, count] : buckets) total += count * count;
  return total;
}

double restriction_ratio(const FrequencyGrid& grid, double p, std::int64_t scale) {
  if (!(p > 2.0)) throw std::domain_error("restriction_ratio: p must exceed 2");
  if (scale < 1) throw std::domain_error("restriction_ratio: scale must be positive");
  CompensatedSum<double> acc;
  for (Eigen::Index j = 0; j < grid.values.size(); ++j) acc += std::pow(std::abs(grid.values(j)), p);
  const double mean = acc.value() / static_cast<double>(grid.size());
  return mean / std::pow(static_cast<double>(scale), p - 1.0);
}

SpectrumReport large_spectrum(const FrequencyGrid& grid, double eta, double peak, double normalization_exponent) {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::domain_error("large_spectrum: eta must lie in (0, 1]");
  if (!(peak > 0.0)) throw std::domain_error("large_spectrum: peak must be positive");
  SpectrumReport report;
  report.eta = eta;
  const double threshold = eta * peak;
  for (Eigen::Index j = 0; j < grid.values.size(); ++j) {
    if (std::abs(grid.values(j)) >= threshold) ++report.count;
  }
  report.measure_estimate = static_cast<double>(report.count) / static_cast<double>(grid.size());
  report.normalized = static_cast<double>(report.count) * std::pow(eta, normalization_exponent);
  return report;
}

}  // namespace shiftlab
