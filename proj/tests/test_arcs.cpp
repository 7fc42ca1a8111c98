#include "oracles.hpp"
#include "shiftlab/arcs.hpp"

#include <doctest.h>

#include <random>

using namespace shiftlab;

namespace {

// Smallest q <= Q with some a/q inside its box, or 0.
std::int64_t brute_denominator(const ArcParameters& params, double alpha) {
  for (std::int64_t q = 1; q <= params.cutoff; ++q) {
    for (std::int64_t a = 0; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      if (std::abs(alpha - double(a) / double(q)) <= params.half_width(q)) return q;
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("classification agrees with a search over all fractions") {
  const ArcParameters params = ArcParameters::make(100'000, 40);
  CHECK(params.arcs_disjoint());
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int majors = 0;
  for (int i = 0; i < 20000; ++i) {
    const double alpha = unit(rng);
    const auto c = classify(params, alpha);
    const std::int64_t q = brute_denominator(params, alpha);
    CHECK(c.is_major() == (q != 0));
    if (c.is_major()) {
      ++majors;
      CHECK(c.major->denominator == q);
      const double gap = c.major->value() - alpha;
      CHECK(std::abs(gap - std::round(gap)) < 1e-12);
    }
  }
  CHECK(majors > 0);
  const auto third = classify(params, 1.0 / 3.0);
  REQUIRE(third.is_major());
  CHECK(third.major->denominator == 3);
  CHECK(third.major->numerator == 1);
}

TEST_CASE("disjointness threshold") {
  CHECK(ArcParameters::make(3200, 40).arcs_disjoint());
  CHECK_FALSE(ArcParameters::make(3199, 40).arcs_disjoint());
  CHECK(ArcParameters::default_cutoff(1'000'000) == 191);
  CHECK_THROWS(ArcParameters::make(100, 0));
}

TEST_CASE("convergents of the golden ratio are Fibonacci fractions") {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto cs = convergents(phi, 100);
  std::vector<std::int64_t> denominators;
  for (const auto& c : cs) denominators.push_back(c.denominator);
  CHECK(denominators == std::vector<std::int64_t>{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89});
}

TEST_CASE("major-arc models") {
  const ExpSumSpec spec = ExpSumSpec::make(10'000, 1, 2);
  const Complex at_zero = major_model_sd(spec, RationalFrequency::make(0, 1));
  CHECK(std::abs(at_zero - Complex(spec.top_power() - 1.0, 0)) < 1e-9);
  // q = 2 with d = 1: C(2; 1, 1) sums over r with r + 1 odd, i.e. r = 0, giving 1.
  CHECK(std::abs(major_model_sd(spec, RationalFrequency::make(1, 2)) - Complex(spec.top_power() - 1.0, 0)) < 1e-9);
  const Complex integral = singular_integral(0.01, 101.0);
  CHECK(std::abs(integral - phase_integral(0.01, 1.0, 101.0)) < 1e-15);
  CHECK(std::abs(major_model_lambda(1, 1, 1000, RationalFrequency::make(0, 1)) - Complex(999, 0)) < 1e-9);
  // q = 4: residues r with r + 1 odd are 0 and 2, e(0) + e(1/2) = 0.
  CHECK(std::abs(major_model_lambda(1, 1, 1000, RationalFrequency::make(1, 4))) < 1e-9);
  CHECK_THROWS(major_model_lambda(2, 4, 1000, RationalFrequency::make(0, 1)));
}

TEST_CASE("minor-arc scan") {
  const LambdaTable table = LambdaTable::build(10'001);
  const ExpSumSpec spec = ExpSumSpec::make(10'000, 1, 1);
  const ArcParameters params = ArcParameters::make(10'000, 20);
  const auto a = minor_sup_scan(table, spec, params, 300, 7);
  const auto b = minor_sup_scan(table, spec, params, 300, 7);
  CHECK(a.sup_abs == b.sup_abs);
  CHECK(a.samples == 300);
  CHECK(a.ratio_to_peak > 0.0);
  CHECK(a.ratio_to_peak < 1.0);
  CHECK_FALSE(classify(params, a.arg_max).is_major());
  CHECK(std::abs(s_d_point(table, spec, a.arg_max)) == doctest::Approx(a.sup_abs).epsilon(1e-9));
  CHECK_THROWS_AS(minor_sup_scan(table, spec, ArcParameters::make(10'000, 10'000), 10, 1), EmptyMinorArcs);
}
