// lpn: command-line front end for the LPN solver toolkit.
//
// Exit codes: 0 success, 2 bad input, 3 infeasible plan, 4 key not
// recovered, 5 resource budget exceeded.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "lpn/errors.hpp"
#include "lpn/experiments.hpp"
#include "lpn/io.hpp"
#include "lpn/oracle.hpp"
#include "lpn/planner.hpp"
#include "lpn/solver.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kBadInput = 2,
  kInfeasible = 3,
  kNotRecovered = 4,
  kResource = 5,
};

struct OverrideFlags {
  std::optional<unsigned> w;
  std::optional<std::size_t> b;
  std::optional<std::size_t> l;
  bool decimate = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--w", w, "Pin w' (even, >= 2)");
    cmd->add_option("--b", b, "Pin b'");
    cmd->add_option("--l", l, "Pin the decimation amount l'");
    cmd->add_flag("--decimate", decimate, "Choose l' from the surplus of samples");
  }

  lpn::PlanOverrides overrides() const {
    lpn::PlanOverrides o;
    o.w_int = w;
    o.b_int = b;
    o.l_prime = l;
    o.auto_decimate = decimate;
    return o;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lpn::InvalidInput("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lpn::InvalidInput("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw lpn::InvalidInput("failed writing '" + path + "'");
}

int run_gen(std::size_t n, const std::string& eps_text, std::size_t count, std::uint64_t seed,
            const std::string& out_path, bool include_key, bool embed_key) {
  const auto eps = lpn::parse_fraction(eps_text);
  lpn::require_bias(eps);
  auto inst = lpn::generate_instance(n, eps, count, seed);
  const lpn::BitVec key = *inst.key;
  if (!embed_key) inst.key.reset();
  write_file(out_path, lpn::instance_to_text(inst));
  if (include_key) write_file(out_path + ".key", lpn::key_to_text(key));
  std::cout << "wrote " << count << " samples to " << out_path << '\n';
  return kOk;
}

int run_plan(std::size_t n, const std::string& eps_text, double log_n, const OverrideFlags& flags) {
  const auto eps = lpn::parse_fraction(eps_text);
  lpn::require_bias(eps);
  const auto plan = lpn::make_plan(n, eps, log_n, flags.overrides());
  std::cout << lpn::plan_to_text(plan);
  return plan.feasible ? kOk : kInfeasible;
}

int run_table(std::size_t n, const std::string& eps_text, const std::vector<double>& log_ns) {
  const auto eps = lpn::parse_fraction(eps_text);
  lpn::require_bias(eps);
  std::cout << lpn::format_table(lpn::emit_table(n, eps, log_ns));
  return kOk;
}

int run_solve(const std::string& in_path, const OverrideFlags& flags, const std::optional<std::string>& key_path,
              const std::optional<std::string>& report_path, const lpn::SolverConfig& config) {
  const auto inst = lpn::instance_from_text(read_file(in_path));
  std::optional<lpn::BitVec> truth = inst.key;
  if (key_path) truth = lpn::key_from_text(read_file(*key_path));
  if (truth && truth->size() != inst.n) throw lpn::InvalidInput("key file dimension does not match the instance");
  if (inst.samples.empty()) throw lpn::InvalidInput("instance has no samples");

  const double log_n = std::log2(static_cast<double>(inst.samples.size()));
  const auto plan = lpn::make_plan(inst.n, inst.eps, log_n, flags.overrides());
  if (!plan.feasible) {
    std::cerr << "infeasible plan: " << plan.reason << '\n';
    std::cout << lpn::plan_to_text(plan);
    return kInfeasible;
  }

  const auto result = lpn::solve(inst, plan, config);
  std::optional<bool> exact;
  if (truth) exact = (result.key_hat == *truth);
  const std::string doc = lpn::result_to_text(plan, result, exact);
  std::cout << doc;
  if (report_path) write_file(*report_path, doc);
  return result.success ? kOk : kNotRecovered;
}

int run_pileup(const std::string& eps_text, unsigned w, std::size_t trials, std::uint64_t seed) {
  const auto eps = lpn::parse_fraction(eps_text);
  const auto r = lpn::pileup_experiment(eps, w, trials, seed);
  std::cout << "predicted = " << lpn::format_fraction(r.predicted) << " (" << fmt::format("{}", lpn::to_double(r.predicted))
            << ")\n";
  std::cout << "empirical = " << fmt::format("{}", r.empirical) << '\n';
  std::cout << "trials = " << r.trials << '\n';
  std::cout << "sigma = " << fmt::format("{}", r.sigma) << '\n';
  std::cout << "z_score = " << fmt::format("{:.4f}", r.z_score) << '\n';
  return kOk;
}

int run_bench(std::size_t n, const std::string& eps_text, double log_n, std::size_t reps, std::uint64_t seed,
              const OverrideFlags& flags, const lpn::SolverConfig& config) {
  if (reps == 0) throw lpn::InvalidInput("repetitions must be positive");
  const auto eps = lpn::parse_fraction(eps_text);
  lpn::require_bias(eps);
  const auto count = static_cast<std::size_t>(std::llround(std::exp2(log_n)));
  const auto plan = lpn::make_plan(n, eps, std::log2(static_cast<double>(count)), flags.overrides());
  if (!plan.feasible) {
    std::cerr << "infeasible plan: " << plan.reason << '\n';
    return kInfeasible;
  }

  struct Totals {
    double decimate = 0, combine = 0, walsh = 0, suffix = 0, decimated = 0, verify = 0, total = 0;
  } sum;
  std::size_t successes = 0;
  lpn::StageReport last;
  for (std::size_t r = 0; r < reps; ++r) {
    const auto inst = lpn::generate_instance(n, eps, count, seed + r);
    const auto result = lpn::solve(inst, plan, config);
    const auto& rep = result.report;
    sum.decimate += rep.decimate_ms;
    sum.combine += rep.combine_ms;
    sum.walsh += rep.walsh_ms;
    sum.suffix += rep.suffix_ms;
    sum.decimated += rep.decimated_bits_ms;
    sum.verify += rep.verify_ms;
    sum.total += rep.total_ms;
    if (result.key_hat == *inst.key) ++successes;
    last = rep;
  }
  const double k = static_cast<double>(reps);
  std::cout << fmt::format("plan: n={} eps={} log N={} w'={} b'={} l'={}\n", n, lpn::format_fraction(eps),
                           lpn::format_trimmed(plan.log_n_samples, 3), plan.w_int, plan.b_int, plan.l_prime);
  std::cout << fmt::format("{:<16}{:>12}\n", "stage", "mean ms");
  const std::pair<const char*, double> stages[] = {
      {"decimate", sum.decimate}, {"combine", sum.combine},   {"walsh", sum.walsh},        {"suffix", sum.suffix},
      {"decimated_bits", sum.decimated}, {"verify", sum.verify}, {"total", sum.total},
  };
  for (const auto& [name, ms] : stages) std::cout << fmt::format("{:<16}{:>12.3f}\n", name, ms / k);

  const double m = static_cast<double>(last.spectrum_dim);
  const double lc_work = std::log2(static_cast<double>(last.halves + last.equations) + 1.0);
  const double ht_work = m + std::log2(std::max(m, 1.0));
  std::cout << fmt::format("{:<16}{:>12}{:>12}{:>12}\n", "cost (log2)", "predicted", "measured", "delta");
  std::cout << fmt::format("{:<16}{:>12.2f}{:>12.2f}{:>12.2f}\n", "C_LC", plan.log_c_lc, lc_work, lc_work - plan.log_c_lc);
  std::cout << fmt::format("{:<16}{:>12.2f}{:>12.2f}{:>12.2f}\n", "C_HT", plan.log_c_ht, ht_work, ht_work - plan.log_c_ht);
  std::cout << fmt::format("recovered {}/{}\n", successes, reps);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learning Parity with Noise solver toolkit"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::string eps = "1/8";
  std::size_t count = 0;
  std::uint64_t seed = 1;
  std::string out_path;
  bool include_key = false;
  bool embed_key = false;
  auto* gen = app.add_subcommand("gen", "Generate a planted LPN instance file");
  gen->add_option("--n", n, "Dimension")->required();
  gen->add_option("--eps", eps, "Bias as NUM/DEN, in (0, 1/2]")->required();
  gen->add_option("--N", count, "Number of samples")->required();
  gen->add_option("--seed", seed, "64-bit seed");
  gen->add_option("--out", out_path, "Output instance file")->required();
  gen->add_flag("--include-key", include_key, "Write the planted key to <out>.key");
  gen->add_flag("--embed-key", embed_key, "Store the planted key inside the instance file");

  double log_n = 0.0;
  OverrideFlags plan_flags;
  auto* plan = app.add_subcommand("plan", "Compute attack parameters");
  plan->add_option("--n", n, "Dimension")->required();
  plan->add_option("--eps", eps, "Bias as NUM/DEN")->required();
  plan->add_option("--logN", log_n, "log2 of the number of samples")->required();
  plan_flags.attach(plan);

  std::size_t table_n = 128;
  std::string table_eps = "1/8";
  std::vector<double> table_log_ns = {10, 20, 30, 40, 47, 50};
  auto* table = app.add_subcommand("table", "Print the parameter and complexity table");
  table->add_option("--n", table_n, "Dimension");
  table->add_option("--eps", table_eps, "Bias as NUM/DEN");
  table->add_option("--logN", table_log_ns, "Comma-separated log2 sample counts")->delimiter(',');

  std::string in_path;
  std::optional<std::string> key_path;
  std::optional<std::string> report_path;
  OverrideFlags solve_flags;
  lpn::SolverConfig config;
  auto* solve = app.add_subcommand("solve", "Recover the key of an instance file");
  solve->add_option("--in", in_path, "Instance file")->required();
  solve->add_option("--key", key_path, "Planted-key side file for exact-match reporting");
  solve->add_option("--report", report_path, "Also write the result document here");
  solve->add_option("--candidates", config.max_candidates, "Sub-key candidates tried before giving up");
  solve->add_option("--fwt-cap", config.fwt_cap, "Largest dimension solved by a direct Walsh spectrum");
  solve_flags.attach(solve);

  unsigned w = 2;
  std::size_t trials = 1000000;
  std::string pileup_eps;
  auto* pileup = app.add_subcommand("pileup", "Measure the bias of XORed noise bits");
  pileup->add_option("--eps", pileup_eps, "Bias as NUM/DEN")->required();
  pileup->add_option("--w", w, "Number of XORed bits")->required();
  pileup->add_option("--trials", trials, "Number of trials (>= 1000)");
  pileup->add_option("--seed", seed, "64-bit seed");

  std::size_t reps = 3;
  OverrideFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "Time each solver stage on planted instances");
  bench->add_option("--n", n, "Dimension")->required();
  bench->add_option("--eps", eps, "Bias as NUM/DEN")->required();
  bench->add_option("--logN", log_n, "log2 of the number of samples")->required();
  bench->add_option("--repetitions", reps, "Instances to time");
  bench->add_option("--seed", seed, "Seed of the first instance");
  bench_flags.attach(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*gen) return run_gen(n, eps, count, seed, out_path, include_key, embed_key);
    if (*plan) return run_plan(n, eps, log_n, plan_flags);
    if (*table) return run_table(table_n, table_eps, table_log_ns);
    if (*solve) return run_solve(in_path, solve_flags, key_path, report_path, config);
    if (*pileup) return run_pileup(pileup_eps, w, trials, seed);
    if (*bench) return run_bench(n, eps, log_n, reps, seed, bench_flags, config);
  } catch (const lpn::InfeasiblePlan& e) {
    std::cerr << "infeasible plan: " << e.what() << '\n';
    return kInfeasible;
  } catch (const lpn::ResourceError& e) {
    std::cerr << "resource limit in stage " << e.stage() << ": " << e.what() << '\n';
    return kResource;
  } catch (const lpn::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
