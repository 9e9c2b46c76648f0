// fastseries: power series square roots and reciprocals from the command line.
//
//   fastseries compute recip --coeffs "1,-1" --n 5
//   fastseries compute sqrtrem --in f.txt --out g.txt
//   fastseries bench --op sqrt --block-size 32 --blocks 1..16 --format csv
//   fastseries selftest --full
//
// Exit status: 0 success, 1 failure (bad input, failed self-test), 2 usage.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fastseries/app/bench.hpp"
#include "fastseries/app/coeff_io.hpp"
#include "fastseries/app/random.hpp"
#include "fastseries/app/selftest.hpp"
#include "fastseries/recip.hpp"
#include "fastseries/sqrt.hpp"

namespace {

using namespace fastseries;

constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComputeArgs {
  std::string op;
  std::optional<std::size_t> n;
  std::optional<std::size_t> blocks;
  std::optional<std::size_t> block_size;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> coeffs;
  std::optional<std::string> in;
  std::optional<std::string> out;
};

struct BenchArgs {
  std::vector<std::string> ops{"sqrt", "recip"};
  std::vector<std::string> ns;
  std::vector<std::string> blocks;
  std::optional<std::size_t> block_size;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::optional<std::string> out;
  bool no_baselines = false;
  std::size_t jobs = 1;
};

// "8", "1..16" and "4,8" style lists (CLI11 already split on commas).
std::vector<std::size_t> expand_sizes(const std::vector<std::string>& items) {
  std::vector<std::size_t> out;
  for (const std::string& item : items) {
    const auto dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoull(item));
        continue;
      }
      const std::size_t lo = std::stoull(item.substr(0, dots));
      const std::size_t hi = std::stoull(item.substr(dots + 2));
      if (lo > hi) throw UsageError("empty range '" + item + "'");
      for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("bad size '" + item + "'");
    }
  }
  return out;
}

std::string counts_summary(const CostLedger& l) {
  return "forward=" + std::to_string(l.block.total_forward()) + " inverse=" + std::to_string(l.block.total_inverse()) +
         " base_forward=" + std::to_string(l.base.total_forward()) +
         " base_inverse=" + std::to_string(l.base.total_inverse());
}

Poly load_input(const ComputeArgs& a) {
  const int sources = (a.coeffs ? 1 : 0) + (a.in ? 1 : 0) + (a.seed ? 1 : 0);
  if (sources != 1) throw UsageError("give exactly one of --coeffs, --in, --seed");
  if (a.coeffs) return app::parse_coeff_list(*a.coeffs);
  if (a.in) return app::read_coeff_file(*a.in);
  if (!a.n) throw UsageError("--seed needs --n");
  if (a.op == "sqrtrem") return app::random_monic(*a.seed, 2 * *a.n);
  return app::random_unit_series(*a.seed, *a.n);
}

void emit(const Poly& p, const std::optional<std::string>& path) {
  if (path) {
    app::write_coeff_file(*path, p);
  } else {
    std::cout << app::format_coeff_list(p) << '\n';
  }
}

int run_compute(const ComputeArgs& a) {
  const Poly f = load_input(a);
  CostLedger ledger;
  if (a.op == "sqrtrem") {
    const SqrtRemainder out = sqrt_rem(f, ledger, a.blocks);
    emit(out.root, a.out);
    emit(out.remainder, a.out ? std::optional<std::string>(*a.out + ".rem") : std::nullopt);
    std::cerr << "sqrtrem n=" << out.plan.n - 1 << " m=" << out.plan.m << " r=" << out.plan.r << ' '
              << counts_summary(ledger) << '\n';
    return 0;
  }

  const std::size_t n = a.n.value_or(f.size());
  if (a.op == "sqrt") {
    const SqrtPlan plan =
        a.block_size ? sqrt_plan_with_block_size(n, *a.block_size, a.blocks) : choose_sqrt_params(n, a.blocks);
    emit(series_sqrt(f, plan, ledger), a.out);
    std::cerr << "sqrt n=" << n << " m=" << plan.m << " r=" << plan.r << ' ' << counts_summary(ledger) << '\n';
  } else {
    const RecipPlan plan =
        a.block_size ? recip_plan_with_block_size(n, *a.block_size, a.blocks) : choose_recip_params(n, a.blocks);
    emit(series_recip(f, plan, ledger), a.out);
    std::cerr << "recip n=" << n << " m=" << plan.m << " s=" << plan.s << ' ' << counts_summary(ledger) << '\n';
  }
  return 0;
}

int run_bench(const BenchArgs& a) {
  app::BenchConfig config;
  config.ops = a.ops;
  config.ns = expand_sizes(a.ns);
  config.blocks = expand_sizes(a.blocks);
  config.block_size = a.block_size;
  config.seed = a.seed;
  config.baselines = !a.no_baselines;
  config.jobs = a.jobs;

  std::ofstream file;
  if (a.out) {
    file.open(*a.out);
    if (!file) throw std::runtime_error("cannot write " + *a.out);
  }
  std::ostream& out = a.out ? file : std::cout;
  const bool csv = a.format == "csv";
  if (csv) out << app::csv_header() << '\n';
  app::run_bench(config, [&](const app::BenchRecord& r) {
    out << (csv ? app::to_csv_row(r) : app::to_json_line(r)) << '\n';
    out.flush();
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Power series square roots and reciprocals with counted transforms"};
  cli.require_subcommand(1);

  ComputeArgs compute;
  CLI::App* compute_cmd = cli.add_subcommand("compute", "Compute a reciprocal, square root, or square root with remainder");
  compute_cmd->add_option("op", compute.op, "recip, sqrt or sqrtrem")
      ->required()
      ->check(CLI::IsMember({"recip", "sqrt", "sqrtrem"}));
  compute_cmd->add_option("--n", compute.n, "Output precision (sqrtrem with --seed: root degree)");
  compute_cmd->add_option("--blocks", compute.blocks, "Number of blocks (r for sqrt, s for recip)");
  compute_cmd->add_option("--block-size", compute.block_size, "Block size m, 3-smooth");
  compute_cmd->add_option("--seed", compute.seed, "Use a seeded random input of length --n");
  compute_cmd->add_option("--coeffs", compute.coeffs, "Comma separated input coefficients");
  compute_cmd->add_option("--in", compute.in, "Input coefficient file")->check(CLI::ExistingFile);
  compute_cmd->add_option("--out", compute.out, "Write coefficients here instead of stdout");

  BenchArgs bench;
  CLI::App* bench_cmd = cli.add_subcommand("bench", "Count transforms and time the algorithms on random inputs");
  bench_cmd->add_option("--op", bench.ops, "sqrt, recip, sqrtrem, schonhage, coupled-newton")
      ->delimiter(',')
      ->check(CLI::IsMember({"sqrt", "recip", "sqrtrem", "schonhage", "coupled-newton"}));
  bench_cmd->add_option("--n", bench.ns, "Precisions, e.g. 1024,4096 or 100..110")->delimiter(',');
  bench_cmd->add_option("--blocks", bench.blocks, "Block counts, e.g. 1..16")->delimiter(',');
  bench_cmd->add_option("--block-size", bench.block_size, "Fixed block size m");
  bench_cmd->add_option("--seed", bench.seed, "Random input seed");
  bench_cmd->add_option("--format", bench.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  bench_cmd->add_option("--out", bench.out, "Write records here instead of stdout");
  bench_cmd->add_flag("--no-baselines", bench.no_baselines, "Skip the schonhage and coupled-newton rows");
  bench_cmd->add_option("--jobs", bench.jobs, "Cases run concurrently")->check(CLI::PositiveNumber);

  app::SelftestOptions selftest;
  CLI::App* selftest_cmd = cli.add_subcommand("selftest", "Run the invariant suites");
  auto* quick = selftest_cmd->add_flag("--quick", "Small sizes (default)");
  selftest_cmd->add_flag("--full", selftest.full, "Larger sizes, includes n = 4096")->excludes(quick);
  selftest_cmd->add_flag("--inject-twiddle-fault", selftest.inject_twiddle_fault)->group("");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.exit(e);
    return kUsage;
  }

  try {
    if (*compute_cmd) return run_compute(compute);
    if (*bench_cmd) return run_bench(bench);
    const auto results = app::run_selftest(selftest);
    std::cout << app::format_report(results);
    return app::all_passed(results) ? 0 : kFailure;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
