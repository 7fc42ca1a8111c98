#include "shiftlab/arcs.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace shiftlab {

ArcParameters ArcParameters::make(std::int64_t ambient, std::int64_t cutoff, double width_constant) {
  if (ambient < 1) throw std::domain_error("ArcParameters: ambient must be positive");
  if (cutoff < 1 || cutoff > ambient) throw std::domain_error("ArcParameters: cutoff must lie in [1, ambient]");
  if (!(width_constant > 0)) throw std::domain_error("ArcParameters: width constant must be positive");
  return ArcParameters{ambient, cutoff, width_constant};
}

std::int64_t ArcParameters::default_cutoff(std::int64_t ambient) {
  if (ambient < 2) return 1;
  const double log_n = std::log(static_cast<double>(ambient));
  const auto q = static_cast<std::int64_t>(std::ceil(log_n * log_n));
  return std::clamp<std::int64_t>(q, 1, ambient);
}

bool ArcParameters::arcs_disjoint() const {
  return 2.0 * width_constant * static_cast<double>(cutoff) * static_cast<double>(cutoff) <=
         static_cast<double>(ambient);
}

std::vector<RationalFrequency> convergents(double alpha, std::int64_t q_max) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw std::domain_error("convergents: alpha must lie in [0, 1)");
  // alpha ~ num / 2^62 exactly enough for denominators far beyond any cutoff.
  constexpr int kBits = 62;
  __int128 num = static_cast<__int128>(std::llround(std::ldexp(alpha, kBits)));
  __int128 den = static_cast<__int128>(1) << kBits;
  __int128 h_prev = 1, h = 0;  // numerators
  __int128 k_prev = 0, k = 1;  // denominators
  std::vector<RationalFrequency> out;
  // a_0 = floor(alpha) = 0 gives the 0/1 convergent.
  out.push_back(RationalFrequency{0, 1, alpha});
  while (num != 0) {
    std::swap(num, den);  // continue with 1 / remainder
    const __int128 partial = num / den;
    num -= partial * den;
    const __int128 h_next = partial * h + h_prev;
    const __int128 k_next = partial * k + k_prev;
    if (k_next > q_max) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    const auto q = static_cast<std::int64_t>(k);
    const auto a = static_cast<std::int64_t>(h);
    const double beta = alpha - static_cast<double>(a) / static_cast<double>(q);
    out.push_back(RationalFrequency{mod_floor(a, q), q, beta});
  }
  return out;
}

ArcClassification classify(const ArcParameters& params, double alpha) {
  for (const RationalFrequency& candidate : convergents(alpha, params.cutoff)) {
    if (std::abs(candidate.offset) <= params.half_width(candidate.denominator)) {
      return ArcClassification{candidate};
    }
  }
  return ArcClassification{};
}

ComplexValue singular_integral(double beta, double upper) { return phase_integral(beta, 1.0, upper); }

ComplexValue major_model_sd(const ExpSumSpec& spec, const RationalFrequency& freq) {
  const std::int64_t q = freq.denominator;
  const std::int64_t d = spec.modulus;
  const CompleteSumSpec complete{q, mod_floor(freq.numerator, q), spec.degree, d, 1};
  const double prefactor = static_cast<double>(euler_phi(d)) / static_cast<double>(euler_phi(d * q));
  const double upper = static_cast<double>(spec.top_power());
  return prefactor * complete_sum_factored(complete) * singular_integral(freq.offset, upper);
}

ComplexValue major_model_lambda(std::int64_t b, std::int64_t d, std::int64_t length, const RationalFrequency& freq) {
  if (d < 1 || std::gcd(b, d) != 1) throw std::domain_error("major_model_lambda: gcd(b, d) != 1");
  const std::int64_t q = freq.denominator;
  const CompleteSumSpec complete{q, mod_floor(freq.numerator, q), 1, d, b};
  const double prefactor = static_cast<double>(euler_phi(d)) / static_cast<double>(euler_phi(d * q));
  return prefactor * complete_sum_factored(complete) * singular_integral(freq.offset, static_cast<double>(length));
}

MinorScanReport minor_sup_scan(const LambdaTable& table, const ExpSumSpec& spec, const ArcParameters& params,
                               std::int64_t sample_count, std::int64_t seed) {
  if (sample_count < 1) throw std::domain_error("minor_sup_scan: sample_count must be positive");
  if (params.half_width(1) >= 0.5) throw EmptyMinorArcs("minor_sup_scan: the q = 1 box covers the circle");

  const Eigen::VectorXd w = shifted_prime_weights(table, spec);
  std::vector<long double> powers;
  std::vector<double> weights;
  CompensatedSum<double> peak;
  for (std::int64_t y = 1; y <= spec.root_bound; ++y) {
    if (w(y - 1) == 0.0) continue;
    powers.push_back(static_cast<long double>(checked_pow(y, spec.degree)));
    weights.push_back(w(y - 1));
    peak += w(y - 1);
  }

  const long double golden = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  const long double start_raw = static_cast<long double>(seed) * std::numbers::sqrt2_v<long double>;
  const long double start = start_raw - std::floor(start_raw);
  const std::int64_t max_attempts = 64 * sample_count + 1024;

  MinorScanReport report;
  report.peak = peak.value();
  for (std::int64_t n = 0; report.samples < sample_count && n < max_attempts; ++n) {
    const long double raw = start + static_cast<long double>(n) * golden;
    const double alpha = static_cast<double>(raw - std::floor(raw));
    ++report.attempts;
    if (alpha >= 1.0 || classify(params, alpha).is_major()) continue;
    ++report.samples;
    ComplexSum acc;
    for (std::size_t i = 0; i < powers.size(); ++i) {
      acc += weights[i] * unit_phase(powers[i] * static_cast<long double>(alpha));
    }
    const double magnitude = std::abs(acc.value());
    if (magnitude > report.sup_abs) {
      report.sup_abs = magnitude;
      report.arg_max = alpha;
    }
  }
  if (report.samples == 0) throw EmptyMinorArcs("minor_sup_scan: no minor-arc frequency found");
  report.ratio_to_peak = report.peak > 0 ? report.sup_abs / report.peak : 0.0;
  return report;
}

}  // namespace shiftlab
