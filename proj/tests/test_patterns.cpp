#include "oracles.hpp"
#include "shiftlab/patterns.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace shiftlab;

namespace {

struct BruteCount {
  double weighted = 0;
  std::int64_t unweighted = 0;
};

// Two loops in ambient coordinates: p1 and p1 + (p2 - 1)^k both in the set and
// in a + q^k [N'], with p2 = q y + 1 a prime power.
BruteCount brute_count(const std::set<std::int64_t>& members, std::int64_t a, std::int64_t q, int k,
                       std::int64_t length) {
  const std::int64_t step = oracle::ipow(q, k);
  std::int64_t m = 0;
  while (oracle::ipow(m + 1, k) <= length) ++m;
  const double density = double(oracle::phi(q)) / double(q);
  BruteCount out;
  for (const std::int64_t p1 : members) {
    if ((p1 - a) % step != 0 || p1 <= a || p1 > a + step * length) continue;
    for (std::int64_t y = 1; y <= m; ++y) {
      const std::int64_t p2 = q * y + 1;
      const double lam2 = oracle::lambda(p2);
      if (lam2 == 0) continue;
      const std::int64_t partner = p1 + oracle::ipow(p2 - 1, k);
      if (partner > a + step * length || !members.count(partner)) continue;
      ++out.unweighted;
      out.weighted += density * density * density * k * std::pow(double(y), k - 1) * lam2 * oracle::lambda(p1) *
                      oracle::lambda(partner);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("prime subsets are validated") {
  const LambdaTable table = LambdaTable::build(1000);
  CHECK_THROWS(PrimeSubset::make(table, 1000, {2, 4}));
  CHECK_THROWS(PrimeSubset::make(table, 100, {101}));
  const PrimeSubset set = PrimeSubset::make(table, 1000, {7, 3, 7, 5});
  CHECK(set.size() == 3);
  CHECK(set.contains(5));
  CHECK_FALSE(set.contains(11));
  CHECK_THROWS(PrimeSubset::make(table, 1000, {3, 7}, Progression::make(1, 4, 200, 1000)));
}

TEST_CASE("frames") {
  CHECK_THROWS(PatternFrame::make(Progression::make(1, 8, 10, 1000), 2, 2));
  CHECK_THROWS(PatternFrame::make(Progression::make(3, 9, 10, 1000, false), 3, 2));
  const PatternFrame frame = PatternFrame::make(Progression::make(1, 9, 100, 1000), 3, 2);
  CHECK(frame.root_bound() == 10);
}

TEST_CASE("direct and Fourier counts against the two-loop reference") {
  const LambdaTable table = LambdaTable::build(30'000);
  std::mt19937_64 rng(3);
  for (const auto& [a, q, k, length] : std::vector<std::tuple<std::int64_t, std::int64_t, int, std::int64_t>>{
           {0, 1, 1, 3000}, {0, 1, 2, 5000}, {1, 2, 1, 2000}, {1, 2, 2, 3000}, {2, 3, 1, 2500}, {5, 3, 2, 2000}}) {
    const PatternFrame frame = PatternFrame::make(Progression::make(a, oracle::ipow(q, k), length,
                                                                    a + oracle::ipow(q, k) * length, q > 1),
                                                  q, k);
    std::vector<std::int64_t> members;
    for (std::int64_t x = 1; x <= length; ++x) {
      const std::int64_t n = frame.prog.member(x);
      if (oracle::is_prime(n) && rng() % 3 != 0) members.push_back(n);
    }
    const PrimeSubset set = PrimeSubset::make(table, frame.prog.ambient, members);
    const std::set<std::int64_t> lookup(members.begin(), members.end());
    const BruteCount expected = brute_count(lookup, a, q, k, length);
    const PatternCount direct = count_direct(table, set, frame);
    CHECK(direct.unweighted == expected.unweighted);
    CHECK(direct.weighted == doctest::Approx(expected.weighted).epsilon(1e-10));
    CHECK(direct.witnesses.size() == std::min<std::size_t>(kWitnessCap, expected.unweighted));
    const std::int64_t grid = suggest_grid_size(length + oracle::ipow(frame.root_bound(), k));
    const FourierPatternCount fourier = count_fourier(table, set, frame, grid);
    CHECK(fourier.exact);
    CHECK(std::abs(fourier.weighted - direct.weighted) <= 1e-6 * std::max(1.0, std::abs(direct.weighted)));
  }
}

TEST_CASE("pattern-free constructions") {
  const LambdaTable table = LambdaTable::build(20'000);
  for (const auto strategy : {PatternFreeStrategy::greedy_descending, PatternFreeStrategy::greedy_ascending,
                              PatternFreeStrategy::greedy_shuffled}) {
    for (const int k : {1, 2}) {
      PatternFreeRequest request;
      request.strategy = strategy;
      request.seed = 17;
      const auto result = find_pattern_free(table, 10'000, k, request);
      CHECK(result.pattern_free);
      CHECK(result.set.size() > 0);
      CHECK(result.verification.weighted == 0.0);
    }
  }
  PatternFreeRequest filter;
  filter.strategy = PatternFreeStrategy::congruence_filter;
  filter.filter_modulus = 3;
  filter.filter_residues = {2};
  const auto filtered = find_pattern_free(table, 2000, 1, filter);
  CHECK_FALSE(filtered.pattern_free);
  CHECK(filtered.verification.unweighted > 0);
  for (const std::int64_t p : filtered.set.members) CHECK(p % 3 == 2);
}

TEST_CASE("the table must cover the shifted primes") {
  const LambdaTable table = LambdaTable::build(50);
  const PatternFrame frame = PatternFrame::make(Progression::make(1, 4, 24, 100), 2, 2);
  CHECK_THROWS_AS(count_direct(table, PrimeSubset::make(table, 100, {5}), frame), std::out_of_range);
}
