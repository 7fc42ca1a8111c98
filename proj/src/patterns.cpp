#include "shiftlab/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace shiftlab {

PrimeSubset PrimeSubset::make(const LambdaTable& table, std::int64_t ambient, std::vector<std::int64_t> members,
                              std::optional<Progression> prog) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const std::int64_t n : members) {
    if (n < 2 || n > ambient) throw std::domain_error("PrimeSubset: member outside [2, N]");
    if (!table.is_prime(n)) throw std::domain_error("PrimeSubset: member " + std::to_string(n) + " is not prime");
    if (prog && !prog->contains(n)) throw std::domain_error("PrimeSubset: member outside its progression");
  }
  return PrimeSubset{ambient, std::move(members), prog};
}

bool PrimeSubset::contains(std::int64_t n) const { return std::binary_search(members.begin(), members.end(), n); }

PatternFrame PatternFrame::make(const Progression& prog, std::int64_t q, int k) {
  if (q < 1 || k < 1) throw std::domain_error("PatternFrame: q and k must be positive");
  if (prog.step != checked_pow(q, k)) throw std::domain_error("PatternFrame: step must equal q^k");
  if (std::gcd(prog.offset, q) != 1) throw std::domain_error("PatternFrame: gcd(a, q) != 1");
  return PatternFrame{prog, q, k};
}

namespace {

// membership[x] for x in [0, N'] of a + q^k x in the set.
std::vector<char> local_membership(const PrimeSubset& set, const Progression& prog) {
  std::vector<char> inside(static_cast<std::size_t>(prog.length) + 1, 0);
  for (const std::int64_t n : set.members) {
    if (prog.contains(n)) inside[static_cast<std::size_t>((n - prog.offset) / prog.step)] = 1;
  }
  return inside;
}

void require_table(const LambdaTable& table, const PatternFrame& frame) {
  if (frame.prog.last() > table.limit() || frame.root_step * frame.root_bound() + 1 > table.limit()) {
    throw std::out_of_range("pattern count: progression exceeds table limit");
  }
}

double density_factor(std::int64_t q) { return static_cast<double>(euler_phi(q)) / static_cast<double>(q); }

}  // namespace

PatternCount count_direct(const LambdaTable& table, const PrimeSubset& set, const PatternFrame& frame) {
  require_table(table, frame);
  const Progression& prog = frame.prog;
  const std::int64_t m = frame.root_bound();
  const auto inside = local_membership(set, prog);

  std::vector<std::int64_t> shifts;
  std::vector<std::int64_t> shifted_primes;
  std::vector<double> shift_weights;
  for (std::int64_t y = 1; y <= m; ++y) {
    const std::int64_t p2 = frame.root_step * y + 1;
    const double lam = table(p2);
    if (lam == 0.0) continue;
    shifts.push_back(checked_pow(y, frame.degree));
    shifted_primes.push_back(p2);
    shift_weights.push_back(frame.degree * std::pow(static_cast<double>(y), frame.degree - 1) * lam);
  }

  const double cube = std::pow(density_factor(frame.root_step), 3);
  PatternCount out;
  CompensatedSum<double> acc;
  for (std::int64_t x = 1; x <= prog.length; ++x) {
    if (!inside[static_cast<std::size_t>(x)]) continue;
    const std::int64_t p1 = prog.member(x);
    const double lam1 = table(p1);
    for (std::size_t i = 0; i < shifts.size(); ++i) {
      const std::int64_t x2 = x + shifts[i];
      if (x2 > prog.length) break;
      if (!inside[static_cast<std::size_t>(x2)]) continue;
      ++out.unweighted;
      acc += shift_weights[i] * lam1 * table(prog.member(x2));
      if (out.witnesses.size() < kWitnessCap) out.witnesses.emplace_back(p1, shifted_primes[i]);
    }
  }
  out.weighted = cube * acc.value();
  return out;
}

FourierPatternCount count_fourier(const LambdaTable& table, const PrimeSubset& set, const PatternFrame& frame,
                                  std::int64_t grid_size) {
  require_table(table, frame);
  if (grid_size < 1) throw std::domain_error("count_fourier: grid size must be positive");
  const Progression& prog = frame.prog;
  const auto inside = local_membership(set, prog);
  const double density = density_factor(frame.root_step);

  Eigen::VectorXd placed = Eigen::VectorXd::Zero(grid_size);
  for (std::int64_t x = 1; x <= prog.length; ++x) {
    if (inside[static_cast<std::size_t>(x)]) placed(x % grid_size) += density * table(prog.member(x));
  }
  const ComplexVector h_hat = positive_transform(placed);
  const ExpSumSpec spec = ExpSumSpec::make(prog.length, frame.root_step, frame.degree);
  const FrequencyGrid s_hat = s_d_grid(table, spec, grid_size);

  CompensatedSum<double> acc;
  for (Eigen::Index j = 0; j < grid_size; ++j) {
    acc += (std::norm(h_hat(j)) * s_hat.values(j)).real();
  }
  FourierPatternCount out;
  out.weighted = acc.value() / static_cast<double>(grid_size);
  out.exact = grid_size > prog.length + spec.top_power();
  return out;
}

PatternFreeResult find_pattern_free(const LambdaTable& table, std::int64_t n, int k,
                                    const PatternFreeRequest& request) {
  if (n < 1 || n > table.limit()) throw std::out_of_range("find_pattern_free: N outside table");
  const PatternFrame frame = PatternFrame::make(Progression::interval(n), 1, k);
  std::vector<std::int64_t> primes;
  for (const std::int64_t p : table.primes()) {
    if (p > n) break;
    primes.push_back(p);
  }

  std::vector<std::int64_t> chosen;
  if (request.strategy == PatternFreeStrategy::congruence_filter) {
    if (request.filter_modulus < 1) throw std::domain_error("find_pattern_free: filter modulus must be positive");
    for (const std::int64_t p : primes) {
      const std::int64_t r = p % request.filter_modulus;
      if (std::find(request.filter_residues.begin(), request.filter_residues.end(), r) !=
          request.filter_residues.end()) {
        chosen.push_back(p);
      }
    }
  } else {
    if (request.strategy == PatternFreeStrategy::greedy_descending) std::reverse(primes.begin(), primes.end());
    if (request.strategy == PatternFreeStrategy::greedy_shuffled) {
      std::mt19937_64 rng(request.seed);
      std::shuffle(primes.begin(), primes.end(), rng);
    }
    std::vector<std::int64_t> shifts;
    const std::int64_t m = frame.root_bound();
    for (std::int64_t y = 1; y <= m; ++y) {
      if (table(y + 1) != 0.0) shifts.push_back(checked_pow(y, k));
    }
    std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
    for (const std::int64_t p : primes) {
      bool clash = false;
      for (const std::int64_t s : shifts) {
        if ((p + s <= n && taken[static_cast<std::size_t>(p + s)]) || (p - s >= 1 && taken[static_cast<std::size_t>(p - s)])) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      taken[static_cast<std::size_t>(p)] = 1;
      chosen.push_back(p);
    }
  }

  PatternFreeResult result;
  result.set = PrimeSubset::make(table, n, std::move(chosen));
  result.verification = count_direct(table, result.set, frame);
  result.pattern_free = result.verification.unweighted == 0;
  return result;
}

}  // namespace shiftlab
