#include "oracles.hpp"
#include "shiftlab/moments.hpp"

#include <doctest.h>

#include <functional>

using namespace shiftlab;

namespace {

// Sum over all 2s-tuples in [M] with equal k-th power sums of prod w(y_i).
double brute_moment(const std::vector<double>& w, int s, int k) {
  const std::int64_t m = static_cast<std::int64_t>(w.size());
  double total = 0;
  std::vector<std::int64_t> ys(static_cast<std::size_t>(2 * s), 1);
  std::function<void(int)> rec = [&](int depth) {
    if (depth == 2 * s) {
      std::int64_t balance = 0;
      double weight = 1;
      for (int i = 0; i < 2 * s; ++i) {
        balance += (i < s ? 1 : -1) * oracle::ipow(ys[i], k);
        weight *= w[static_cast<std::size_t>(ys[i] - 1)];
      }
      if (balance == 0) total += weight;
      return;
    }
    for (std::int64_t y = 1; y <= m; ++y) {
      ys[static_cast<std::size_t>(depth)] = y;
      rec(depth + 1);
    }
  };
  rec(0);
  return total;
}

std::int64_t brute_vinogradov(int s, int k, std::int64_t m) {
  std::int64_t count = 0;
  std::vector<std::int64_t> ys(static_cast<std::size_t>(2 * s), 1);
  std::function<void(int)> rec = [&](int depth) {
    if (depth == 2 * s) {
      for (int j = 1; j <= k; ++j) {
        std::int64_t balance = 0;
        for (int i = 0; i < 2 * s; ++i) balance += (i < s ? 1 : -1) * oracle::ipow(ys[i], j);
        if (balance != 0) return;
      }
      ++count;
      return;
    }
    for (std::int64_t y = 1; y <= m; ++y) {
      ys[static_cast<std::size_t>(depth)] = y;
      rec(depth + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace

TEST_CASE("unweighted moments against nested loops") {
  CHECK(moment_exact(nullptr, MomentSpec{2, 1, 3}) == doctest::Approx(19.0));
  for (const auto& [s, k, m] : std::vector<std::tuple<int, int, std::int64_t>>{
           {1, 1, 10}, {2, 2, 10}, {2, 3, 12}, {3, 1, 5}, {3, 2, 6}}) {
    const std::vector<double> ones(static_cast<std::size_t>(m), 1.0);
    CHECK(moment_exact(nullptr, MomentSpec{s, k, m}) == doctest::Approx(brute_moment(ones, s, k)));
  }
  CHECK(moment_exact(nullptr, MomentSpec{2, 2, 10}) == doctest::Approx(210.0));
}

TEST_CASE("shifted-prime weighted moments") {
  const LambdaTable table = LambdaTable::build(1000);
  const MomentSpec spec{2, 2, 9, MomentWeighting::shifted_prime, 2};
  const Eigen::VectorXd w = moment_weights(&table, spec);
  std::vector<double> expected(9);
  for (std::int64_t y = 1; y <= 9; ++y) expected[y - 1] = 0.5 * 2 * y * oracle::lambda(2 * y + 1);
  for (int i = 0; i < 9; ++i) CHECK(w(i) == doctest::Approx(expected[i]));
  CHECK(moment_exact(&table, spec) == doctest::Approx(brute_moment(expected, 2, 2)));
  CHECK_THROWS(moment_weights(nullptr, spec));
}

TEST_CASE("grid moments equal exact moments above the resolution") {
  const LambdaTable table = LambdaTable::build(1000);
  for (const auto& [s, k, m] : std::vector<std::tuple<int, int, std::int64_t>>{{1, 2, 20}, {2, 2, 12}, {3, 1, 30}}) {
    const MomentSpec spec{s, k, m, MomentWeighting::shifted_prime, 1};
    const Eigen::VectorXd w = moment_weights(&table, spec);
    const std::int64_t support = oracle::ipow(m, k);
    const auto exact_grid = moment_grid(power_weight_grid(w, k, suggest_grid_size(2 * s * support)), 2 * s);
    CHECK(exact_grid.exact);
    CHECK(exact_grid.value == doctest::Approx(moment_exact(w, s, k)).epsilon(1e-9));
    const auto coarse = moment_grid(power_weight_grid(w, k, 8), 2 * s);
    CHECK_FALSE(coarse.exact);
  }
  const FrequencyGrid grid = power_weight_grid(Eigen::VectorXd::Ones(4), 1, 16);
  CHECK_THROWS(moment_grid(grid, 3));
}

TEST_CASE("Vinogradov counts against nested loops") {
  CHECK(vinogradov_count(2, 2, 10) == 190);
  CHECK(vinogradov_count(2, 2, 10) == brute_vinogradov(2, 2, 10));
  CHECK(vinogradov_count(3, 2, 6) == brute_vinogradov(3, 2, 6));
  CHECK(vinogradov_count(2, 1, 7) == brute_vinogradov(2, 1, 7));
  CHECK(vinogradov_count(1, 3, 9) == 9);
}

TEST_CASE("memory ceiling for moments") {
  CHECK_THROWS_AS(moment_exact(nullptr, MomentSpec{3, 3, 200}, 1000), ResourceError);
}

TEST_CASE("restriction and large spectrum") {
  const LambdaTable table = LambdaTable::build(4001);
  const WeightedSequence seq = lambda_progression(table, 1, 1, 4000);
  const FrequencyGrid grid = nu_hat_grid(seq, 8192);
  const double ratio = restriction_ratio(grid, 3.0, 4000);
  CHECK(ratio > 0.5);
  CHECK(ratio < 5.0);
  CHECK_THROWS(restriction_ratio(grid, 2.0, 4000));
  const double peak = grid.values.cwiseAbs().maxCoeff();
  std::int64_t previous = grid.size() + 1;
  for (const double eta : {0.05, 0.1, 0.2, 0.4, 0.8, 1.0}) {
    const auto r = large_spectrum(grid, eta, peak, 3.0);
    CHECK(r.count <= previous);
    CHECK(r.count >= 1);
    CHECK(r.normalized == doctest::Approx(r.count * eta * eta * eta));
    previous = r.count;
  }
  CHECK_THROWS(large_spectrum(grid, 0.0, peak, 3.0));
  CHECK(spectrum_exponent(2) == 8.0);
}
