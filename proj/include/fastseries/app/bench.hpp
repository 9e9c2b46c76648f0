#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fastseries/ledger.hpp"

namespace fastseries::app {

// One measured operation. Every field except wall_ns is deterministic.
struct BenchRecord {
  std::string op;  // sqrt, recip, sqrtrem, schonhage, coupled-newton
  std::size_t n = 0;
  std::size_t m = 0;       // 0 for the baselines
  std::size_t blocks = 0;  // r or s; 0 for the baselines
  TransformLedger::Counts forward;  // blockwise phase only (everything, for baselines)
  TransformLedger::Counts inverse;
  double weighted_cost = 0.0;  // all transforms, base case included
  double base_cost = 0.0;      // base case transforms only
  std::int64_t wall_ns = 0;
  std::optional<double> max_error;  // against the recurrence oracle
  std::string rng;
  std::uint64_t seed = 0;
  // Block phase weighted cost over the cost of one full product of the same
  // size (3 transforms of length 2m per output block), and the value the
  // exact transform count predicts for it.
  std::optional<double> block_ratio;
  std::optional<double> expected_ratio;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

std::string to_json_line(const BenchRecord& r);
BenchRecord parse_json_line(const std::string& line);

std::string csv_header();
std::string to_csv_row(const BenchRecord& r);

inline constexpr std::size_t kOracleCutoff = 4096;

struct BenchCase {
  std::string op;
  std::size_t n = 0;  // 0: derived from blocks and block_size
  std::optional<std::size_t> blocks;
  std::optional<std::size_t> block_size;
  std::uint64_t seed = 0;
};

// Runs one case on the seeded random input. Throws std::invalid_argument for
// an unknown op or an unusable size combination.
BenchRecord run_case(const BenchCase& c, std::size_t oracle_cutoff = kOracleCutoff);

struct BenchConfig {
  std::vector<std::string> ops;
  std::vector<std::size_t> ns;      // may be empty when block_size is set
  std::vector<std::size_t> blocks;  // empty: automatic choice
  std::optional<std::size_t> block_size;
  std::uint64_t seed = 1;
  bool baselines = true;  // add schonhage / coupled-newton rows at each n
  std::size_t jobs = 1;
  std::size_t oracle_cutoff = kOracleCutoff;
};

// Expands the configuration into cases, in output order.
std::vector<BenchCase> expand(const BenchConfig& config);

// Runs every case, up to config.jobs at a time, and hands the records to
// `sink` in case order from the calling thread.
void run_bench(const BenchConfig& config, const std::function<void(const BenchRecord&)>& sink);

}  // namespace fastseries::app
