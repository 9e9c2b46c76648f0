#include "fastseries/app/selftest.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

#include "fastseries/app/random.hpp"
#include "fastseries/baselines.hpp"
#include "fastseries/blockwise.hpp"
#include "fastseries/oracle.hpp"
#include "fastseries/recip.hpp"
#include "fastseries/sqrt.hpp"
#include "fastseries/transform.hpp"

namespace fastseries::app {
namespace {

// Tracks the worst error and count mismatch of one suite and remembers the
// first thing that went wrong.
class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void error(double err, double tol, const std::string& what) {
    if (!(err <= tol)) {
      char buf[64];
      std::snprintf(buf, sizeof buf, ": error %.3e > %.3e", err, tol);
      fail(what + buf);
    }
    if (std::isnan(err) || err > result_.max_error) result_.max_error = err;
  }

  void count(std::uint64_t got, std::uint64_t want, const std::string& what) {
    if (got == want) return;
    result_.count_delta += got > want ? static_cast<std::int64_t>(got - want) : static_cast<std::int64_t>(want - got);
    fail(what + ": " + std::to_string(got) + " transforms, expected " + std::to_string(want));
  }

  void fail(const std::string& what) {
    if (result_.passed) result_.detail = what;
    result_.passed = false;
  }

  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

// Runs `body`, converting an escaping exception into a suite failure.
template <typename Body>
SuiteResult guarded(const std::string& name, Body&& body) {
  Suite suite(name);
  try {
    body(suite);
  } catch (const std::exception& e) {
    suite.fail(std::string("exception: ") + e.what());
  }
  return suite.done();
}

Poly random_complex(Pcg64& rng, std::size_t n) {
  Poly p(n);
  for (Complex& c : p) c = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return p;
}

Poly naive_dft(const Poly& p, std::size_t n) {
  Poly out(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((i * j) % n) / static_cast<double>(n);
      out[j] += p[i] * std::polar(1.0, angle);
    }
  }
  return out;
}

Poly as_poly(const Spectrum& s) { return Poly(std::vector<Complex>(s.values().begin(), s.values().end())); }

std::string at_n(std::size_t n) { return "n = " + std::to_string(n); }

SuiteResult transform_suite(bool full) {
  return guarded("transform vs direct DFT", [&](Suite& suite) {
    Pcg64 rng(11);
    const std::size_t limit = full ? 432 : 96;
    for (std::size_t n = 1; n <= limit; ++n) {
      if (!is_supported(n)) continue;
      TransformLedger ledger;
      const Poly p = random_complex(rng, n);
      const Spectrum s = forward(p, n, ledger);
      const double tol = 1e-12 * static_cast<double>(n);
      suite.error(max_abs_diff(as_poly(s), naive_dft(p, n)), tol, "forward " + at_n(n));
      suite.error(max_abs_diff(inverse(s, ledger), p), tol, "round trip " + at_n(n));
      suite.count(ledger.total(), 2, "round trip " + at_n(n));
    }
  });
}

SuiteResult middle_product_suite(bool full) {
  return guarded("middle product vs schoolbook", [&](Suite& suite) {
    Pcg64 rng(12);
    for (std::size_t n = 1; n <= (full ? 96u : 32u); ++n) {
      if (!is_supported(2 * n)) continue;
      TransformLedger ledger;
      const Poly g = random_complex(rng, 2 * n);
      const Poly h = random_complex(rng, n);
      suite.error(max_abs_diff(middle_product(g, h, n, ledger), oracle::middle_product_naive(g, h, n)),
                  1e-12 * static_cast<double>(n), at_n(n));
      suite.count(ledger.total(), 3, at_n(n));
    }
  });
}

SuiteResult block_product_suite(bool full) {
  return guarded("block products vs schoolbook", [&](Suite& suite) {
    Pcg64 rng(13);
    constexpr std::array<std::size_t, 5> sizes{1, 2, 4, 8, 16};
    const int cases = full ? 200 : 40;
    for (int c = 0; c < cases; ++c) {
      const std::size_t m = sizes[static_cast<std::size_t>(c) % sizes.size()];
      const std::size_t t = 1 + rng() % 8;
      const std::size_t k = rng() % t;
      TransformLedger ledger;
      const Poly f = random_complex(rng, t * m);
      const Poly g = random_complex(rng, t * m);
      const BlockSeries fb = BlockSeries::decompose(f, m, t);
      const BlockSeries gb = BlockSeries::decompose(g, m, t);
      TransformCache fc(m), gc(m);
      for (std::size_t i = 0; i < t; ++i) {
        ensure_transform(fc, fb, i, ledger);
        ensure_transform(gc, gb, i, ledger);
      }
      const Poly full_product = oracle::mul_schoolbook(f, g);
      const double tol = 1e-9 * static_cast<double>(m * (k + 1));
      const std::string what = "m = " + std::to_string(m) + ", k = " + std::to_string(k);

      TransformLedger step;
      const bool combined = c % 2 == 1;
      Poly got;
      Poly want = full_product.slice(k * m, m);
      if (combined) {
        // f g - g f + f f: the middle terms cancel, leaving (f^2)_[k].
        const std::array terms{BlockTerm{&fc, &gc, +1}, BlockTerm{&gc, &fc, -1}, BlockTerm{&fc, &fc, +1}};
        got = combined_block(terms, k, step);
        want = oracle::mul_schoolbook(f, f).slice(k * m, m);
      } else {
        got = product_block(fc, gc, k, step);
      }
      suite.error(max_abs_diff(got, want), tol, what);
      suite.count(step.inverse_count(2 * m), 1, what);
      suite.count(step.total(), 1, what);
    }
  });
}

SuiteResult sqrt_count_suite() {
  return guarded("square root transform count 4r-3", [](Suite& suite) {
    const std::size_t m = 32;
    for (std::size_t r = 1; r <= 16; ++r) {
      const Poly f = random_tapered_series(20 + r, r * m);
      TransformLedger base;
      const SqrtPair start = sqrt_newton_coupled(f.truncated(m), m, base);
      TransformLedger ledger;
      sqrt_block_iter(BlockSeries::decompose(f, m, r), start.root, start.inverse, r, ledger);
      const std::string what = "r = " + std::to_string(r);
      suite.count(ledger.forward_count(2 * m), 2 * (r - 1) + 1, what + " forward");
      suite.count(ledger.inverse_count(2 * m), 2 * (r - 1), what + " inverse");
      suite.count(ledger.total(), 4 * r - 3, what);
    }
  });
}

SuiteResult recip_count_suite() {
  return guarded("reciprocal transform count 13s-3", [](Suite& suite) {
    const std::size_t m = 16;
    for (std::size_t s = 1; s <= 8; ++s) {
      const Poly f = random_tapered_series(40 + s, 3 * s * m);
      TransformLedger base;
      const Poly g0 = recip_schonhage(f.truncated(m), m, base);
      TransformLedger ledger;
      recip_block_iter(BlockSeries::decompose(f, m, 3 * s), g0, s, ledger);
      const std::string what = "s = " + std::to_string(s);
      suite.count(ledger.forward_count(2 * m), 7 * s - 1, what + " forward");
      suite.count(ledger.inverse_count(2 * m), 6 * s - 2, what + " inverse");
      suite.count(ledger.total(), 13 * s - 3, what);
    }
  });
}

std::vector<std::size_t> oracle_sizes(bool full) {
  std::vector<std::size_t> ns{16, 100, 512, 1024};
  if (full) ns.push_back(4096);
  return ns;
}

Poly unit(std::size_t n) {
  Poly one(n);
  if (n) one[0] = 1.0;
  return one;
}

SuiteResult sqrt_oracle_suite(bool full) {
  return guarded("square root vs recurrence", [&](Suite& suite) {
    const int seeds = full ? 20 : 3;
    for (const std::size_t n : oracle_sizes(full)) {
      for (int seed = 0; seed < seeds; ++seed) {
        const Poly f = random_tapered_series(1000 + seed, n);
        CostLedger ledger;
        const Poly g = series_sqrt(f, n, ledger);
        const double tol = 1e-8 * static_cast<double>(n);
        suite.error(max_abs_diff(g, oracle::sqrt_recurrence(f, n)), tol, at_n(n));
        if (n <= 1024) {
          suite.error(max_abs_diff(oracle::mul_schoolbook(g, g).truncated(n), f), tol, "residual " + at_n(n));
        }
        suite.count(ledger.block.total(), 4 * choose_sqrt_params(n).r - 3, at_n(n));
      }
    }
  });
}

SuiteResult recip_oracle_suite(bool full) {
  return guarded("reciprocal vs recurrence", [&](Suite& suite) {
    const int seeds = full ? 20 : 3;
    for (const std::size_t n : oracle_sizes(full)) {
      for (int seed = 0; seed < seeds; ++seed) {
        const Poly f = random_tapered_series(2000 + seed, n);
        CostLedger ledger;
        const Poly g = series_recip(f, n, ledger);
        const double tol = 1e-8 * static_cast<double>(n);
        suite.error(max_abs_diff(g, oracle::recip_recurrence(f, n)), tol, at_n(n));
        if (n <= 1024) {
          suite.error(max_abs_diff(oracle::mul_schoolbook(f, g).truncated(n), unit(n)), tol, "residual " + at_n(n));
        }
        suite.count(ledger.block.total(), 13 * choose_recip_params(n).s - 3, at_n(n));
      }
    }
  });
}

SuiteResult sqrt_rem_suite(bool full) {
  return guarded("square root with remainder", [&](Suite& suite) {
    const int trials = full ? 10 : 3;
    const std::size_t n = 64;
    for (int seed = 0; seed < trials; ++seed) {
      const Poly f = random_monic(3000 + seed, 2 * n);
      CostLedger ledger;
      const SqrtRemainder out = sqrt_rem(f, ledger);
      Poly rebuilt = oracle::mul_schoolbook(out.root, out.root);
      for (std::size_t i = 0; i < out.remainder.size(); ++i) rebuilt[i] += out.remainder[i];
      suite.error(max_abs_diff(rebuilt, f), 1e-7, "residual");
      if (out.root.size() != n + 1 || out.remainder.size() != n) suite.fail("wrong output degrees");
      const std::size_t r = out.plan.r;
      const TransformLedger& block = ledger.block;
      suite.count(block.forward_count(2 * out.plan.m), 2 * (r - 1) + 2, "forward");
      suite.count(block.inverse_count(2 * out.plan.m), 2 * (r - 1) + r, "inverse");
    }
  });
}

SuiteResult determinism_suite() {
  return guarded("determinism", [](Suite& suite) {
    const Poly f = random_tapered_series(77, 1000);
    CostLedger a, b, c, d;
    const Poly r1 = series_recip(f, 1000, a);
    const Poly r2 = series_recip(f, 1000, b);
    const Poly s1 = series_sqrt(f, 1000, c);
    const Poly s2 = series_sqrt(f, 1000, d);
    if (!(r1 == r2) || !(s1 == s2)) suite.fail("outputs differ between runs");
    if (!(a.total() == b.total()) || !(c.total() == d.total())) suite.fail("ledgers differ between runs");
  });
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  std::optional<testing::ScopedTwiddleFault> fault;
  if (options.inject_twiddle_fault) fault.emplace();
  const bool full = options.full;
  return {
      transform_suite(full),    middle_product_suite(full), block_product_suite(full),
      sqrt_count_suite(),       recip_count_suite(),        sqrt_oracle_suite(full),
      recip_oracle_suite(full), sqrt_rem_suite(full),       determinism_suite(),
  };
}

std::string format_report(const std::vector<SuiteResult>& results) {
  std::string out;
  char buf[256];
  for (const SuiteResult& r : results) {
    std::snprintf(buf, sizeof buf, "%s  %-36s max_error=%.3e count_delta=%lld", r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), r.max_error, static_cast<long long>(r.count_delta));
    out += buf;
    if (!r.passed) out += "  (" + r.detail + ")";
    out += '\n';
  }
  std::size_t failed = 0;
  for (const SuiteResult& r : results) failed += r.passed ? 0 : 1;
  out += failed ? std::to_string(failed) + " of " + std::to_string(results.size()) + " suites failed\n"
                : "all " + std::to_string(results.size()) + " suites passed\n";
  return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const SuiteResult& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace fastseries::app
