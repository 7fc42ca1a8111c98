#include "shiftlab/numeric.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <limits>

namespace shiftlab {

void require_within_ceiling(std::size_t entries, std::size_t ceiling, const std::string& what) {
  if (entries > ceiling) {
    throw ResourceError(what + ": " + std::to_string(entries) + " entries exceed ceiling " +
                        std::to_string(ceiling));
  }
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::domain_error("euler_phi: n must be positive");
  std::int64_t result = n;
  for (const auto& [p, e] : factorize(n)) {
    result = result / p * (p - 1);
  }
  return result;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw std::domain_error("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime_trial(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  __int128 result = 1;
  __int128 b = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) result = (result * b) % m;
    b = (b * b) % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t checked_pow(std::int64_t base, int k) {
  if (k < 0) throw std::domain_error("checked_pow: negative exponent");
  __int128 acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= base;
    if (acc > std::numeric_limits<std::int64_t>::max() || acc < std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("checked_pow: result exceeds int64");
    }
  }
  return static_cast<std::int64_t>(acc);
}

namespace {

// m^k <= n without overflow.
bool power_at_most(std::int64_t m, int k, std::int64_t n) {
  __int128 acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= m;
    if (acc > n) return false;
  }
  return true;
}

}  // namespace

std::int64_t integer_root(std::int64_t n, int k) {
  if (k < 1) throw std::domain_error("integer_root: degree must be positive");
  if (n < 1) return 0;
  std::int64_t lo = 1;  // 1^k <= n
  std::int64_t hi = n;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (power_at_most(mid, k, n)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::int64_t suggest_grid_size(std::int64_t resolution) {
  std::int64_t n = 1;
  while (n <= resolution) n <<= 1;
  return n;
}

Complex unit_phase(long double t) {
  long double frac = t - std::floor(t);
  const double angle = static_cast<double>(2.0L * std::numbers::pi_v<long double> * frac);
  return {std::cos(angle), std::sin(angle)};
}

UnitRoots::UnitRoots(std::int64_t modulus) {
  if (modulus < 1) throw std::domain_error("UnitRoots: modulus must be positive");
  constexpr std::int64_t kReseed = std::int64_t{1} << 16;
  roots_.resize(static_cast<std::size_t>(modulus));
  const Complex step = unit_phase(1.0L / static_cast<long double>(modulus));
  Complex current{1.0, 0.0};
  for (std::int64_t j = 0; j < modulus; ++j) {
    if (j % kReseed == 0) {
      current = unit_phase(static_cast<long double>(j) / static_cast<long double>(modulus));
    }
    roots_[static_cast<std::size_t>(j)] = current;
    current *= step;
  }
}

namespace {

std::vector<Complex> forward_fft(const std::vector<Complex>& in) {
  if (in.size() <= 1) return in;
  Eigen::FFT<double> fft;
  std::vector<Complex> out;
  fft.fwd(out, in);
  return out;
}

}  // namespace

ComplexVector positive_transform(const Eigen::VectorXd& weights) {
  std::vector<Complex> in(static_cast<std::size_t>(weights.size()));
  for (Eigen::Index i = 0; i < weights.size(); ++i) in[static_cast<std::size_t>(i)] = weights(i);
  const auto out = forward_fft(in);
  ComplexVector values(weights.size());
  for (Eigen::Index j = 0; j < values.size(); ++j) values(j) = std::conj(out[static_cast<std::size_t>(j)]);
  return values;
}

ComplexVector positive_transform(const ComplexVector& weights) {
  std::vector<Complex> in(static_cast<std::size_t>(weights.size()));
  for (Eigen::Index i = 0; i < weights.size(); ++i) in[static_cast<std::size_t>(i)] = std::conj(weights(i));
  const auto out = forward_fft(in);
  ComplexVector values(weights.size());
  for (Eigen::Index j = 0; j < values.size(); ++j) values(j) = std::conj(out[static_cast<std::size_t>(j)]);
  return values;
}

ComplexVector inverse_positive_transform(const ComplexVector& values) {
  std::vector<Complex> in(values.data(), values.data() + values.size());
  const auto out = forward_fft(in);
  const double scale = 1.0 / static_cast<double>(values.size());
  ComplexVector result(values.size());
  for (Eigen::Index n = 0; n < result.size(); ++n) result(n) = out[static_cast<std::size_t>(n)] * scale;
  return result;
}

Complex phase_integral(double beta, double lo, double hi) {
  const double length = hi - lo;
  if (beta == 0.0) return {length, 0.0};
  const double pi = std::numbers::pi;
  const Complex centre = unit_phase(static_cast<long double>(beta) * (static_cast<long double>(lo) + hi) / 2.0L);
  return centre * (std::sin(pi * beta * length) / (pi * beta));
}

}  // namespace shiftlab
