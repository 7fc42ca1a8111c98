#include "oracles.hpp"
#include "shiftlab/sieve.hpp"

#include <doctest.h>

using namespace shiftlab;

TEST_CASE("Lambda matches trial factorization") {
  const LambdaTable table = LambdaTable::build(10'000);
  for (std::int64_t n = 1; n <= 10'000; ++n) {
    CHECK(table(n) == doctest::Approx(oracle::lambda(n)).epsilon(1e-15));
    CHECK(table.is_prime(n) == oracle::is_prime(n));
  }
  CHECK(table(0) == 0.0);
  CHECK(table(10'001) == 0.0);
  CHECK(table.primes().size() == 1229);
  CHECK(table.smallest_prime_factor(9991) == 97);
}

TEST_CASE("table respects the memory ceiling") {
  CHECK_THROWS_AS(LambdaTable::build(1'000'000, 1000), ResourceError);
}

TEST_CASE("psi against a direct sum") {
  const LambdaTable table = LambdaTable::build(5000);
  for (const std::int64_t q : {1, 3, 4, 10}) {
    for (std::int64_t a = 0; a < q; ++a) {
      double expected = 0;
      for (std::int64_t n = 1; n <= 4321; ++n) {
        if (n % q == a) expected += oracle::lambda(n);
      }
      CHECK(psi(table, 4321.7, q, a) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
  CHECK(psi(table, 0.5, 1, 0) == 0.0);
  CHECK_THROWS_AS(psi(table, 5001, 1, 0), std::out_of_range);
  // frozen
  CHECK(psi(table, 100, 1, 0) == doctest::Approx(94.0453112293574).epsilon(1e-13));
}

TEST_CASE("progressions") {
  const Progression p = Progression::make(3, 4, 5, 100);
  CHECK(p.member(1) == 7);
  CHECK(p.last() == 23);
  CHECK(p.contains(11));
  CHECK_FALSE(p.contains(3));
  CHECK_FALSE(p.contains(27));
  CHECK_THROWS(Progression::make(3, 4, 30, 100));
  CHECK_THROWS(Progression::make(2, 4, 5, 100));
  CHECK_NOTHROW(Progression::make(2, 4, 5, 100, false));
  CHECK_THROWS(Progression::make(-4, 4, 5, 100));
  const Progression negative = Progression::make(-3, 4, 5, 100);
  CHECK(negative.member(1) == 1);
  const Progression interval = Progression::interval(50);
  CHECK(interval.member(1) == 1);
  CHECK(interval.last() == 50);
  const Progression child = Progression::make(7, 8, 2, 100);
  CHECK(child.subset_of(p));
  CHECK(p.subset_of(interval));
  CHECK_FALSE(Progression::make(9, 4, 2, 100).subset_of(Progression::make(3, 6, 10, 100, false)));
}

TEST_CASE("lambda_progression carries the phi(d)/d factor") {
  const LambdaTable table = LambdaTable::build(2000);
  const WeightedSequence seq = lambda_progression(table, 1, 6, 300);
  CHECK(seq.length() == 300);
  for (std::int64_t x = 1; x <= 300; ++x) {
    CHECK(seq.at(x) == doctest::Approx(oracle::lambda(1 + 6 * x) / 3.0));
  }
  CHECK(seq.at(0) == 0.0);
  CHECK(seq.at(301) == 0.0);
}

TEST_CASE("prime counts in progressions at 10^6") {
  const LambdaTable table = LambdaTable::build(1'000'000);
  for (std::int64_t q = 1; q <= 6; ++q) {
    for (std::int64_t a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      CHECK(check_siegel_walfisz(table, 1e6, q, a).relative_error < 0.01);
    }
  }
  // frozen
  CHECK(psi(table, 1e6, 1, 0) == doctest::Approx(999586.597495633).epsilon(1e-12));
  const auto r = check_short_ap(table, 500'000, 20'000, 3, 1);
  CHECK(r.in_expected_range);
  CHECK(r.sum == doctest::Approx(10251.028229237523).epsilon(1e-12));
  CHECK_FALSE(check_short_ap(table, 500'000, 100, 3, 1).in_expected_range);
  CHECK_THROWS(check_short_ap(table, 1000, 10, 4, 2));
}
