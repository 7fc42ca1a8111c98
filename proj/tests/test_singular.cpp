#include "oracles.hpp"
#include "shiftlab/gauss.hpp"
#include "shiftlab/singular.hpp"

#include <doctest.h>

using namespace shiftlab;

namespace {

std::int64_t brute_M(std::int64_t p, std::int64_t q, std::int64_t a, int k) {
  std::int64_t count = 0;
  for (std::int64_t x1 = 0; x1 < p; ++x1) {
    if ((q * x1 + a) % p == 0) continue;
    for (std::int64_t x2 = 0; x2 < p; ++x2) {
      if ((q * x2 + a) % p == 0) continue;
      for (std::int64_t x3 = 0; x3 < p; ++x3) {
        if ((q * x3 + 1) % p == 0) continue;
        if ((x1 + x2 + oracle::ipow(x3, k) % p) % p == 0) ++count;
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("closed-form M(p) against the triple loop") {
  for (const std::int64_t p : {2, 3, 5, 7, 11, 13, 29}) {
    for (const std::int64_t q : {1, 2, 3, 4, 5, 6, 9, 10}) {
      if (q % p == 0) continue;
      for (std::int64_t a = 1; a <= 5; ++a) {
        if (std::gcd(a, q) != 1) continue;
        for (int k = 1; k <= 4; ++k) CHECK(local_count_M(p, q, a, k) == brute_M(p, q, a, k));
      }
    }
  }
}

TEST_CASE("M(2) is positive") {
  for (const std::int64_t q : {1, 3, 5, 9}) {
    for (std::int64_t a = 1; a <= 6; ++a) {
      if (std::gcd(a, q) != 1) continue;
      for (int k = 1; k <= 3; ++k) CHECK(local_count_M(2, q, a, k) >= 1);
    }
  }
  // q odd, a odd: (0, 0, 0) is admissible while (1, 1, 0) is not.
  CHECK(brute_M(2, 3, 1, 2) == 1);
}

TEST_CASE("identity path agrees with the exponential-sum path") {
  for (const std::int64_t p : {3, 5, 7, 31, 97}) {
    for (const auto& [q, a, k] : std::vector<std::tuple<std::int64_t, std::int64_t, int>>{
             {1, 1, 1}, {2, 1, 2}, {4, 3, 3}, {10, 7, 2}}) {
      if (q % p == 0) continue;
      const auto r = local_factor_report(p, q, a, k);
      CHECK(r.identity_residual < 1e-6);
      CHECK(r.a_value == doctest::Approx(r.a_from_sums).epsilon(1e-9));
      CHECK(local_factor_A_sums(p, q, a, k) == doctest::Approx(r.a_value).epsilon(1e-9));
    }
  }
}

TEST_CASE("exponential-sum path against complete sums") {
  for (const std::int64_t p : {5, 11, 23}) {
    for (const int k : {1, 2, 3}) {
      const std::int64_t q = 4, a = 3;
      Complex acc = 0;
      for (std::int64_t b = 1; b < p; ++b) {
        const Complex linear = complete_sum_direct(CompleteSumSpec{p, b, 1, q, a});
        const Complex power = complete_sum_direct(CompleteSumSpec{p, b, k, q, 1});
        acc += linear * linear * power;
      }
      const double phi = static_cast<double>(p - 1);
      CHECK(local_factor_A_sums(p, q, a, k) == doctest::Approx(acc.real() / (phi * phi * phi)).epsilon(1e-12));
    }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS(local_count_M(3, 3, 1, 1));
  CHECK_THROWS(local_count_M(4, 1, 1, 1));
  CHECK_THROWS(local_count_M(5, 4, 2, 1));
  CHECK_THROWS(singular_series(4, 2, 1, 100));
}

TEST_CASE("partial singular series") {
  const auto small = singular_series(3, 1, 2, 1000);
  const auto large = singular_series(3, 1, 2, 10'000);
  CHECK(small.partial_product == doctest::Approx(small.reversed_product).epsilon(1e-12));
  CHECK(std::abs(large.partial_product - small.partial_product) < 0.05 * std::abs(large.partial_product));
  CHECK(small.fitted_exponent < -1.5);
  CHECK(std::isfinite(small.tail_bound_estimate));
  CHECK(small.partial_product > 0);
  // frozen
  CHECK(small.partial_product == doctest::Approx(1.944441900883298).epsilon(1e-12));
  CHECK(primes_up_to(30) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}
