#include "fastseries/app/bench.hpp"

#include <chrono>
#include <cstdio>
#include <deque>
#include <future>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "fastseries/app/random.hpp"
#include "fastseries/baselines.hpp"
#include "fastseries/oracle.hpp"
#include "fastseries/recip.hpp"
#include "fastseries/sqrt.hpp"

namespace fastseries::app {
namespace {

using nlohmann::json;

json counts_to_json(const TransformLedger::Counts& c) {
  json out = json::object();
  for (const auto& [len, count] : c) out[std::to_string(len)] = count;
  return out;
}

TransformLedger::Counts counts_from_json(const json& j) {
  TransformLedger::Counts out;
  for (const auto& [key, value] : j.items()) out[std::stoull(key)] = value.get<std::uint64_t>();
  return out;
}

template <typename T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string counts_to_csv(const TransformLedger::Counts& c) {
  std::string out;
  for (const auto& [len, count] : c) {
    if (!out.empty()) out += ';';
    out += std::to_string(len) + ':' + std::to_string(count);
  }
  return out;
}

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <typename T>
std::string optional_csv(const std::optional<T>& v) {
  return v ? number(static_cast<double>(*v)) : std::string{};
}

template <typename Fn>
std::int64_t time_ns(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
}

void fill_costs(BenchRecord& rec, const CostLedger& ledger) {
  rec.forward = ledger.block.forward();
  rec.inverse = ledger.block.inverse();
  rec.weighted_cost = ledger.total().weighted_cost();
  rec.base_cost = ledger.base.weighted_cost();
}

// Block phase cost in units of one full product of r m coefficients.
void fill_ratio(BenchRecord& rec, const CostLedger& ledger, std::size_t product_blocks, double predicted_count) {
  const double unit = 3.0 * static_cast<double>(product_blocks) * transform_weight(2 * rec.m);
  if (unit <= 0.0) return;
  rec.block_ratio = ledger.block.weighted_cost() / unit;
  rec.expected_ratio = predicted_count / (3.0 * static_cast<double>(product_blocks));
}

std::size_t resolve_n(const BenchCase& c) {
  if (c.n) return c.n;
  if (!c.block_size || !c.blocks) {
    throw std::invalid_argument(c.op + ": need n, or both a block size and a block count");
  }
  if (c.op == "sqrt") return *c.blocks * *c.block_size;
  if (c.op == "recip") return 3 * *c.blocks * *c.block_size;
  throw std::invalid_argument(c.op + ": n is required");
}

}  // namespace

std::string to_json_line(const BenchRecord& r) {
  const json j = {
      {"op", r.op},
      {"n", r.n},
      {"m", r.m},
      {"blocks", r.blocks},
      {"forward", counts_to_json(r.forward)},
      {"inverse", counts_to_json(r.inverse)},
      {"weighted_cost", r.weighted_cost},
      {"base_cost", r.base_cost},
      {"wall_ns", r.wall_ns},
      {"max_error", optional_to_json(r.max_error)},
      {"rng", r.rng},
      {"seed", r.seed},
      {"block_ratio", optional_to_json(r.block_ratio)},
      {"expected_ratio", optional_to_json(r.expected_ratio)},
  };
  return j.dump();
}

BenchRecord parse_json_line(const std::string& line) {
  const json j = json::parse(line);
  BenchRecord r;
  r.op = j.at("op").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  r.blocks = j.at("blocks").get<std::size_t>();
  r.forward = counts_from_json(j.at("forward"));
  r.inverse = counts_from_json(j.at("inverse"));
  r.weighted_cost = j.at("weighted_cost").get<double>();
  r.base_cost = j.at("base_cost").get<double>();
  r.wall_ns = j.at("wall_ns").get<std::int64_t>();
  r.max_error = optional_from_json<double>(j, "max_error");
  r.rng = j.at("rng").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.block_ratio = optional_from_json<double>(j, "block_ratio");
  r.expected_ratio = optional_from_json<double>(j, "expected_ratio");
  return r;
}

std::string csv_header() {
  return "op,n,m,blocks,forward_total,inverse_total,forward,inverse,weighted_cost,base_cost,wall_ns,"
         "max_error,rng,seed,block_ratio,expected_ratio";
}

std::string to_csv_row(const BenchRecord& r) {
  std::uint64_t fwd = 0, inv = 0;
  for (const auto& [len, count] : r.forward) fwd += count;
  for (const auto& [len, count] : r.inverse) inv += count;
  return r.op + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.blocks) + ',' +
         std::to_string(fwd) + ',' + std::to_string(inv) + ',' + counts_to_csv(r.forward) + ',' +
         counts_to_csv(r.inverse) + ',' + number(r.weighted_cost) + ',' + number(r.base_cost) + ',' +
         std::to_string(r.wall_ns) + ',' + optional_csv(r.max_error) + ',' + r.rng + ',' + std::to_string(r.seed) +
         ',' + optional_csv(r.block_ratio) + ',' + optional_csv(r.expected_ratio);
}

BenchRecord run_case(const BenchCase& c, std::size_t oracle_cutoff) {
  BenchRecord rec;
  rec.op = c.op;
  rec.n = resolve_n(c);
  rec.rng = std::string(Pcg64::kName);
  rec.seed = c.seed;
  const std::size_t n = rec.n;
  const bool check = n <= oracle_cutoff;

  if (c.op == "sqrt" || c.op == "recip") {
    const Poly f = random_unit_series(c.seed, n);
    CostLedger ledger;
    Poly out;
    if (c.op == "sqrt") {
      const SqrtPlan plan =
          c.block_size ? sqrt_plan_with_block_size(n, *c.block_size, c.blocks) : choose_sqrt_params(n, c.blocks);
      rec.m = plan.m;
      rec.blocks = plan.r;
      rec.wall_ns = time_ns([&] { out = series_sqrt(f, plan, ledger); });
      if (check) rec.max_error = max_abs_diff(out, oracle::sqrt_recurrence(f, n));
      fill_costs(rec, ledger);
      fill_ratio(rec, ledger, plan.r, 4.0 * static_cast<double>(plan.r) - 3.0);
    } else {
      const RecipPlan plan = c.block_size ? recip_plan_with_block_size(n, *c.block_size, c.blocks)
                                          : choose_recip_params(n, c.blocks);
      rec.m = plan.m;
      rec.blocks = plan.s;
      rec.wall_ns = time_ns([&] { out = series_recip(f, plan, ledger); });
      if (check) rec.max_error = max_abs_diff(out, oracle::recip_recurrence(f, n));
      fill_costs(rec, ledger);
      fill_ratio(rec, ledger, 3 * plan.s, 13.0 * static_cast<double>(plan.s) - 3.0);
    }
    return rec;
  }

  if (c.op == "sqrtrem") {
    if (c.block_size) throw std::invalid_argument("sqrtrem: the block size is chosen from n");
    const Poly f = random_monic(c.seed, 2 * n);
    CostLedger ledger;
    SqrtRemainder out;
    rec.wall_ns = time_ns([&] { out = sqrt_rem(f, ledger, c.blocks); });
    rec.m = out.plan.m;
    rec.blocks = out.plan.r;
    if (check) {
      Poly rebuilt = oracle::mul_schoolbook(out.root, out.root);
      for (std::size_t i = 0; i < out.remainder.size(); ++i) rebuilt[i] += out.remainder[i];
      rec.max_error = max_abs_diff(rebuilt, f);
    }
    fill_costs(rec, ledger);
    fill_ratio(rec, ledger, out.plan.r, 5.0 * static_cast<double>(out.plan.r) - 2.0);
    return rec;
  }

  if (c.op == "schonhage" || c.op == "coupled-newton") {
    const Poly f = random_unit_series(c.seed, n);
    TransformLedger ledger;
    if (c.op == "schonhage") {
      Poly out;
      rec.wall_ns = time_ns([&] { out = recip_schonhage(f, n, ledger); });
      if (check) rec.max_error = max_abs_diff(out, oracle::recip_recurrence(f, n));
    } else {
      SqrtPair out;
      rec.wall_ns = time_ns([&] { out = sqrt_newton_coupled(f, n, ledger); });
      if (check) rec.max_error = max_abs_diff(out.root, oracle::sqrt_recurrence(f, n));
    }
    rec.forward = ledger.forward();
    rec.inverse = ledger.inverse();
    rec.weighted_cost = ledger.weighted_cost();
    return rec;
  }

  throw std::invalid_argument("unsupported op '" + c.op + "'");
}

std::vector<BenchCase> expand(const BenchConfig& config) {
  std::vector<BenchCase> cases;
  std::set<std::pair<std::string, std::size_t>> baseline_done;
  const std::vector<std::size_t> ns = config.ns.empty() ? std::vector<std::size_t>{0} : config.ns;
  std::vector<std::optional<std::size_t>> blocks;
  for (const std::size_t b : config.blocks) blocks.emplace_back(b);
  if (blocks.empty()) blocks.emplace_back();

  for (const std::string& op : config.ops) {
    for (const std::size_t n : ns) {
      for (const auto& b : blocks) {
        BenchCase c{op, n, b, config.block_size, config.seed};
        c.n = resolve_n(c);
        cases.push_back(c);
        if (!config.baselines) continue;
        const char* baseline = op == "recip" ? "schonhage" : op == "sqrt" ? "coupled-newton" : nullptr;
        if (baseline && baseline_done.emplace(baseline, c.n).second) {
          cases.push_back(BenchCase{baseline, c.n, std::nullopt, std::nullopt, config.seed});
        }
      }
    }
  }
  return cases;
}

void run_bench(const BenchConfig& config, const std::function<void(const BenchRecord&)>& sink) {
  const std::vector<BenchCase> cases = expand(config);
  const std::size_t jobs = config.jobs ? config.jobs : 1;
  std::deque<std::future<BenchRecord>> pending;
  std::size_t next = 0;
  for (std::size_t done = 0; done < cases.size(); ++done) {
    while (next < cases.size() && pending.size() < jobs) {
      const BenchCase& c = cases[next++];
      const std::size_t cutoff = config.oracle_cutoff;
      pending.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                   [c, cutoff] { return run_case(c, cutoff); }));
    }
    BenchRecord rec = pending.front().get();
    pending.pop_front();
    sink(rec);
  }
}

}  // namespace fastseries::app
