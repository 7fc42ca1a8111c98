// Command-line front end. Every subcommand prints JSON lines, or CSV with --csv/--table.

#include "shiftlab/arcs.hpp"
#include "shiftlab/expsum.hpp"
#include "shiftlab/gauss.hpp"
#include "shiftlab/increment.hpp"
#include "shiftlab/moments.hpp"
#include "shiftlab/patterns.hpp"
#include "shiftlab/sieve.hpp"
#include "shiftlab/singular.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace shiftlab;

namespace {

void emit(const json& j) { std::cout << j.dump() << '\n'; }

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}}; }

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(std::stoll(item));
  }
  return out;
}

// all | greedy | greedy-asc | shuffled:SEED | filter:M:R1,R2 | file:PATH
PrimeSubset build_set(const LambdaTable& table, std::int64_t n, int k, const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "all") {
    std::vector<std::int64_t> members;
    for (const std::int64_t p : table.primes()) {
      if (p > n) break;
      members.push_back(p);
    }
    return PrimeSubset::make(table, n, members);
  }
  if (kind == "file") {
    std::ifstream in(rest);
    if (!in) throw std::runtime_error("cannot open set file " + rest);
    std::vector<std::int64_t> members;
    std::int64_t p = 0;
    while (in >> p) members.push_back(p);
    return PrimeSubset::make(table, n, members);
  }
  PatternFreeRequest request;
  if (kind == "greedy") {
    request.strategy = PatternFreeStrategy::greedy_descending;
  } else if (kind == "greedy-asc") {
    request.strategy = PatternFreeStrategy::greedy_ascending;
  } else if (kind == "shuffled") {
    request.strategy = PatternFreeStrategy::greedy_shuffled;
    request.seed = rest.empty() ? 1 : std::stoull(rest);
  } else if (kind == "filter") {
    const auto second = rest.find(':');
    if (second == std::string::npos) throw std::invalid_argument("filter set needs M:R1,R2,...");
    request.strategy = PatternFreeStrategy::congruence_filter;
    request.filter_modulus = std::stoll(rest.substr(0, second));
    request.filter_residues = parse_list(rest.substr(second + 1));
  } else {
    throw std::invalid_argument("unknown set kind " + kind);
  }
  return find_pattern_free(table, n, k, request).set;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shiftlab: prime counts, exponential sums and density increments"};
  app.require_subcommand(1);

  // sieve
  auto* sieve_cmd = app.add_subcommand("sieve", "psi(x;q,a) and prime-counting checks");
  std::int64_t sieve_limit = 1'000'000;
  std::vector<std::int64_t> psi_args, sw_args, short_args;
  sieve_cmd->add_option("--limit", sieve_limit, "table limit")->required();
  sieve_cmd->add_option("--psi", psi_args, "x,q,a")->delimiter(',')->expected(3);
  sieve_cmd->add_option("--check-sw", sw_args, "x,q,a")->delimiter(',')->expected(3);
  sieve_cmd->add_option("--check-short", short_args, "x,h,q,a")->delimiter(',')->expected(4);

  // gauss
  auto* gauss_cmd = app.add_subcommand("gauss", "complete exponential sums");
  std::int64_t g_q = 1, g_a = 1, g_t = 1, g_b = 1, g_sweep = 0;
  int g_k = 1;
  double g_eps = 0.01;
  gauss_cmd->add_option("--q", g_q);
  gauss_cmd->add_option("--a", g_a);
  gauss_cmd->add_option("--k", g_k);
  gauss_cmd->add_option("--t", g_t);
  gauss_cmd->add_option("--b", g_b);
  gauss_cmd->add_option("--eps", g_eps);
  gauss_cmd->add_option("--sweep", g_sweep, "worst ratio over q <= value");

  // expsum
  auto* exp_cmd = app.add_subcommand("expsum", "S_d at a point or on a grid");
  std::int64_t e_n = 1000, e_d = 1, e_grid = 0;
  int e_k = 1;
  double e_alpha = 0;
  std::string e_out;
  exp_cmd->add_option("--n", e_n)->required();
  exp_cmd->add_option("--d", e_d);
  exp_cmd->add_option("--k", e_k);
  auto* alpha_opt = exp_cmd->add_option("--alpha", e_alpha);
  auto* grid_opt = exp_cmd->add_option("--grid", e_grid, "grid size");
  exp_cmd->add_option("--out", e_out, "binary output for --grid");
  alpha_opt->excludes(grid_opt);

  // arcs
  auto* arcs_cmd = app.add_subcommand("arcs", "classification, major-arc models, minor-arc scans");
  std::int64_t r_n = 100000, r_d = 1, r_cutoff = 0, r_scan = 0, r_seed = 1;
  int r_k = 1;
  double r_classify = 0, r_width = 1.0;
  std::vector<double> r_model;
  arcs_cmd->add_option("--n", r_n)->required();
  arcs_cmd->add_option("--k", r_k);
  arcs_cmd->add_option("--d", r_d);
  arcs_cmd->add_option("--cutoff", r_cutoff, "Q (default ceil((log N')^2))");
  arcs_cmd->add_option("--width", r_width);
  auto* classify_opt = arcs_cmd->add_option("--classify", r_classify, "alpha");
  arcs_cmd->add_option("--model", r_model, "a,q,beta")->delimiter(',')->expected(3);
  arcs_cmd->add_option("--minor-scan", r_scan, "sample count");
  arcs_cmd->add_option("--seed", r_seed);

  // moments
  auto* mom_cmd = app.add_subcommand("moments", "moments, restriction and large spectra");
  std::string m_mode = "exact";
  int m_s = 1, m_k = 1;
  std::int64_t m_m = 10, m_d = 1, m_grid = 0, m_x = 10000;
  bool m_weighted = false;
  double m_p = 3.0;
  std::vector<double> m_etas = {0.05, 0.1, 0.2, 0.4};
  mom_cmd->add_option("--mode", m_mode)->check(CLI::IsMember({"exact", "grid", "vinogradov", "restriction", "spectrum"}));
  mom_cmd->add_option("--s", m_s);
  mom_cmd->add_option("--k", m_k);
  mom_cmd->add_option("--m", m_m, "root bound M");
  mom_cmd->add_option("--d", m_d);
  mom_cmd->add_flag("--weighted", m_weighted, "shifted-prime weights");
  mom_cmd->add_option("--grid", m_grid);
  mom_cmd->add_option("--x", m_x, "length X for restriction/spectrum");
  mom_cmd->add_option("--p", m_p);
  mom_cmd->add_option("--etas", m_etas)->delimiter(',');

  // singular
  auto* sing_cmd = app.add_subcommand("singular", "local factors and partial singular series");
  std::int64_t s_q = 1, s_a = 1, s_plimit = 1000;
  int s_k = 1;
  bool s_table = false;
  sing_cmd->add_option("--q", s_q);
  sing_cmd->add_option("--a", s_a);
  sing_cmd->add_option("--k", s_k);
  sing_cmd->add_option("--plimit", s_plimit);
  sing_cmd->add_flag("--table", s_table, "CSV of p, A, M, residual");

  // patterns
  auto* pat_cmd = app.add_subcommand("patterns", "count p1, p1 + (p2 - 1)^k in a prime subset");
  std::int64_t p_n = 10000, p_q = 1, p_a = 0, p_grid = 0;
  int p_k = 1;
  std::string p_set = "all", p_mode = "direct";
  pat_cmd->add_option("--n", p_n)->required();
  pat_cmd->add_option("--k", p_k);
  pat_cmd->add_option("--q", p_q);
  pat_cmd->add_option("--a", p_a);
  pat_cmd->add_option("--set", p_set, "all | greedy | greedy-asc | shuffled:SEED | filter:M:R,... | file:PATH");
  pat_cmd->add_option("--mode", p_mode)->check(CLI::IsMember({"direct", "fourier"}));
  pat_cmd->add_option("--grid", p_grid);

  // increment
  auto* inc_cmd = app.add_subcommand("increment", "run the density-increment iteration");
  std::int64_t i_n = 10000;
  int i_k = 1;
  std::string i_set = "greedy";
  IncrementLimits limits;
  bool i_csv = false;
  inc_cmd->add_option("--n", i_n)->required();
  inc_cmd->add_option("--k", i_k);
  inc_cmd->add_option("--set", i_set);
  inc_cmd->add_option("--qmax", limits.q_max);
  inc_cmd->add_option("--cutoff", limits.cutoff);
  inc_cmd->add_option("--steps", limits.max_steps);
  inc_cmd->add_option("--min-length", limits.min_length);
  inc_cmd->add_option("--a-exponent", limits.a_exponent);
  inc_cmd->add_flag("--csv", i_csv);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sieve_cmd) {
      const LambdaTable table = LambdaTable::build(sieve_limit);
      if (!psi_args.empty()) {
        emit({{"x", psi_args[0]}, {"q", psi_args[1]}, {"a", psi_args[2]},
              {"psi", psi(table, static_cast<double>(psi_args[0]), psi_args[1], psi_args[2])}});
      }
      if (!sw_args.empty()) {
        const auto r = check_siegel_walfisz(table, static_cast<double>(sw_args[0]), sw_args[1], sw_args[2]);
        emit({{"x", sw_args[0]}, {"q", sw_args[1]}, {"a", sw_args[2]}, {"measured", r.measured},
              {"main_term", r.main_term}, {"relative_error", r.relative_error}});
      }
      if (!short_args.empty()) {
        const auto r = check_short_ap(table, short_args[0], short_args[1], short_args[2], short_args[3]);
        emit({{"x", short_args[0]}, {"h", short_args[1]}, {"sum", r.sum}, {"lower", r.lower}, {"upper", r.upper},
              {"within", r.within}, {"in_expected_range", r.in_expected_range}});
      }
    } else if (*gauss_cmd) {
      if (g_sweep > 0) {
        const auto r = sweep_bound_ratio(g_sweep, g_k, g_eps);
        emit({{"q_max", g_sweep}, {"k", g_k}, {"worst_ratio", r.worst_ratio}, {"worst_modulus", r.worst_modulus}});
      } else {
        const CompleteSumSpec spec{g_q, g_a, g_k, g_t, g_b};
        json j = complex_json(complete_sum_factored(spec));
        j["ratio"] = bound_ratio(spec, g_eps);
        emit(j);
      }
    } else if (*exp_cmd) {
      const ExpSumSpec spec = ExpSumSpec::make(e_n, e_d, e_k);
      const LambdaTable table = LambdaTable::build(e_d * spec.root_bound + 1);
      if (e_grid > 0) {
        const FrequencyGrid grid = s_d_grid(table, spec, e_grid);
        if (e_out.empty()) throw std::invalid_argument("--grid needs --out");
        std::ofstream out(e_out, std::ios::binary);
        const std::uint64_t size = static_cast<std::uint64_t>(grid.size());
        unsigned char header[8];
        for (int i = 0; i < 8; ++i) header[i] = static_cast<unsigned char>(size >> (8 * i));
        out.write(reinterpret_cast<const char*>(header), 8);
        for (Eigen::Index j = 0; j < grid.size(); ++j) {
          const double pair[2] = {grid.values(j).real(), grid.values(j).imag()};
          out.write(reinterpret_cast<const char*>(pair), sizeof pair);
        }
        const json meta = {{"n", e_n}, {"d", e_d}, {"k", e_k}, {"grid", e_grid},
                           {"support_degree", grid.support_degree}, {"layout", "u64le size, then re,im float64"}};
        std::ofstream(e_out + ".json") << meta.dump(2) << '\n';
        emit(meta);
      } else {
        json j = complex_json(s_d_point(table, spec, e_alpha));
        j["alpha"] = e_alpha;
        emit(j);
      }
    } else if (*arcs_cmd) {
      const std::int64_t cutoff = r_cutoff > 0 ? r_cutoff : ArcParameters::default_cutoff(r_n);
      const ArcParameters params = ArcParameters::make(r_n, cutoff, r_width);
      const ExpSumSpec spec = ExpSumSpec::make(r_n, r_d, r_k);
      if (*classify_opt) {
        const auto c = classify(params, r_classify);
        json j = {{"alpha", r_classify}, {"major", c.is_major()}};
        if (c.major) j.update({{"a", c.major->numerator}, {"q", c.major->denominator}, {"beta", c.major->offset}});
        emit(j);
      }
      if (!r_model.empty()) {
        const LambdaTable table = LambdaTable::build(r_d * spec.root_bound + 1);
        const auto freq = RationalFrequency::make(static_cast<std::int64_t>(r_model[0]),
                                                  static_cast<std::int64_t>(r_model[1]), r_model[2]);
        const Complex value = s_d_point(table, spec, freq);
        const Complex model = major_model_sd(spec, freq);
        emit({{"value", complex_json(value)}, {"model", complex_json(model)},
              {"relative_error", std::abs(value - model) / std::max(std::abs(model), 1e-300)}});
      }
      if (r_scan > 0) {
        const LambdaTable table = LambdaTable::build(r_d * spec.root_bound + 1);
        const auto r = minor_sup_scan(table, spec, params, r_scan, r_seed);
        emit({{"sup_abs", r.sup_abs}, {"arg_max", r.arg_max}, {"peak", r.peak}, {"ratio_to_peak", r.ratio_to_peak},
              {"samples", r.samples}, {"attempts", r.attempts}});
      }
    } else if (*mom_cmd) {
      MomentSpec spec{m_s, m_k, m_m, m_weighted ? MomentWeighting::shifted_prime : MomentWeighting::unweighted, m_d};
      if (m_mode == "exact") {
        const LambdaTable table = LambdaTable::build(m_d * m_m + 1);
        emit({{"s", m_s}, {"k", m_k}, {"M", m_m}, {"moment", moment_exact(&table, spec)}});
      } else if (m_mode == "grid") {
        spec.validate();
        const LambdaTable table = LambdaTable::build(m_d * m_m + 1);
        const Eigen::VectorXd w = moment_weights(&table, spec);
        const std::int64_t top = checked_pow(m_m, m_k);
        const std::int64_t size = m_grid > 0 ? m_grid : suggest_grid_size(2 * m_s * top);
        const auto g = moment_grid(power_weight_grid(w, m_k, size), 2 * m_s);
        emit({{"s", m_s}, {"k", m_k}, {"M", m_m}, {"grid", size}, {"moment", g.value}, {"exact", g.exact}});
      } else if (m_mode == "vinogradov") {
        emit({{"s", m_s}, {"k", m_k}, {"M", m_m}, {"count", vinogradov_count(m_s, m_k, m_m)}});
      } else {
        const LambdaTable table = LambdaTable::build(m_d * m_x + 1);
        const WeightedSequence seq = lambda_progression(table, 1, m_d, m_x);
        const std::int64_t size = m_grid > 0 ? m_grid : suggest_grid_size(2 * m_x);
        const FrequencyGrid grid = nu_hat_grid(seq, size);
        if (m_mode == "restriction") {
          emit({{"x", m_x}, {"p", m_p}, {"ratio", restriction_ratio(grid, m_p, m_x)}});
        } else {
          const double peak = grid.values.cwiseAbs().maxCoeff();
          std::cout << "eta,count,normalized\n";
          for (const double eta : m_etas) {
            const auto r = large_spectrum(grid, eta, peak, 3.0);
            std::cout << eta << ',' << r.count << ',' << r.normalized << '\n';
          }
        }
      }
    } else if (*sing_cmd) {
      if (s_table) {
        std::cout << "p,A,M,residual\n";
        for (const std::int64_t p : primes_up_to(s_plimit)) {
          if (s_q % p == 0) continue;
          const auto r = local_factor_report(p, s_q, s_a, s_k);
          std::cout << p << ',' << r.a_value << ',' << r.m_count << ',' << r.identity_residual << '\n';
        }
      } else {
        const auto r = singular_series(s_q, s_a, s_k, s_plimit);
        emit({{"q", r.q}, {"a", r.a}, {"k", r.k}, {"prime_limit", r.prime_limit},
              {"partial_product", r.partial_product}, {"reversed_product", r.reversed_product},
              {"tail_bound_estimate", r.tail_bound_estimate}, {"fitted_exponent", r.fitted_exponent},
              {"factors", r.factors}});
      }
    } else if (*pat_cmd) {
      const std::int64_t step = checked_pow(p_q, p_k);
      const std::int64_t length = (p_n - p_a) / step;
      const Progression prog = Progression::make(p_a, step, length, p_n, step > 1);
      const PatternFrame frame = PatternFrame::make(prog, p_q, p_k);
      const LambdaTable table = LambdaTable::build(std::max(p_n, p_q * frame.root_bound() + 1));
      const PrimeSubset set = build_set(table, p_n, p_k, p_set);
      if (p_mode == "direct") {
        const auto c = count_direct(table, set, frame);
        emit({{"set_size", set.size()}, {"weighted", c.weighted}, {"unweighted", c.unweighted},
              {"witnesses", c.witnesses}});
      } else {
        const std::int64_t size =
            p_grid > 0 ? p_grid : suggest_grid_size(length + checked_pow(frame.root_bound(), p_k));
        const auto c = count_fourier(table, set, frame, size);
        emit({{"set_size", set.size()}, {"weighted", c.weighted}, {"exact", c.exact}, {"grid", size}});
      }
    } else if (*inc_cmd) {
      const LambdaTable table = LambdaTable::build(i_n + 1);
      const PrimeSubset set = build_set(table, i_n, i_k, i_set);
      const IncrementTrace trace = increment_iterate(table, set, i_n, i_k, limits);
      if (i_csv) std::cout << "i,density,q,length,outcome\n";
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& s = trace.steps[i];
        if (i_csv) {
          std::cout << i << ',' << s.density << ',' << s.root_step << ',' << s.length << ',' << to_string(s.outcome)
                    << '\n';
        } else {
          emit({{"i", i}, {"density", s.density}, {"q", s.root_step}, {"length", s.length},
                {"offset", s.prog.offset}, {"step", s.prog.step}, {"gain", s.gain}, {"outcome", to_string(s.outcome)}});
        }
      }
      if (!i_csv) {
        emit({{"stop_reason", to_string(trace.stop_reason)}, {"hit_step_limit", trace.hit_step_limit},
              {"final_density", trace.final_density}, {"set_size", set.size()}});
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
