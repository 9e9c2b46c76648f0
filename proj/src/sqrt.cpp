#include "fastseries/sqrt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "checks.hpp"
#include "fastseries/baselines.hpp"
#include "fastseries/transform.hpp"

namespace fastseries {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

void validate(const SqrtPlan& plan) {
  if (plan.n < 1) throw std::invalid_argument("SqrtPlan: precision must be at least 1");
  if (plan.r < 1) throw std::invalid_argument("SqrtPlan: block count must be at least 1");
  if (plan.m < 1 || !is_supported(2 * plan.m)) {
    throw std::invalid_argument("SqrtPlan: block size " + std::to_string(plan.m) + " is not 3-smooth");
  }
  if (plan.r * plan.m < plan.n) throw std::invalid_argument("SqrtPlan: r * m must cover n");
}

struct BlockRoot {
  BlockSeries g;
  TransformCache cache;  // holds F_2m(g_[0..r-2])
};

BlockRoot run_block_sqrt(const BlockSeries& f, const Poly& g0, const Poly& h, std::size_t r,
                         TransformLedger& ledger, SqrtTrace* trace) {
  const std::size_t m = f.block_size();
  if (r < 1) throw std::invalid_argument("sqrt_block_iter: r must be at least 1");
  if (f.num_blocks() < r) throw std::invalid_argument("sqrt_block_iter: f has fewer than r blocks");
  if (g0.size() != m || h.size() != m) {
    throw std::invalid_argument("sqrt_block_iter: g0 and h must have the block size of f");
  }
  detail::require_unit_constant(f.block(0), "sqrt_block_iter");

  const std::size_t len = 2 * m;
  const Spectrum h_spec = forward(h, len, ledger);

  BlockRoot out{BlockSeries(m), TransformCache(m)};
  out.g.append(g0);
  for (std::size_t k = 1; k < r; ++k) {
    ensure_transform(out.cache, out.g, k - 1, ledger);
    const Poly psi = product_block(out.cache, out.cache, k, ledger, k, k);

    Poly rhs = f.block(k);
    for (std::size_t j = 0; j < m; ++j) rhs[j] -= psi[j];
    // deg(h * rhs) < 2m - 1, so the length-2m cyclic product is the full one.
    const Poly prod = inverse(pointwise_mul(h_spec, forward(rhs, len, ledger)), ledger);
    Poly next(m);
    for (std::size_t j = 0; j < m; ++j) next[j] = 0.5 * prod[j];
    out.g.append(std::move(next));

    if (trace) trace->psi.push_back(psi);
  }
  return out;
}

}  // namespace

SqrtPlan choose_sqrt_params(std::size_t n, std::optional<std::size_t> blocks_override) {
  detail::require_positive_precision(n, "choose_sqrt_params");
  std::size_t r = 0;
  if (blocks_override) {
    if (*blocks_override < 1) throw std::invalid_argument("choose_sqrt_params: block override must be >= 1");
    r = *blocks_override;
  } else {
    const long rounded = std::lround(std::log2(static_cast<double>(n)) / 2.0);
    r = static_cast<std::size_t>(std::clamp(rounded, 1L, 32L));
  }
  return {n, r, next_supported(ceil_div(n, r))};
}

SqrtPlan sqrt_plan_with_block_size(std::size_t n, std::size_t m,
                                   std::optional<std::size_t> blocks_override) {
  detail::require_positive_precision(n, "sqrt_plan_with_block_size");
  if (m < 1) throw std::invalid_argument("sqrt_plan_with_block_size: block size must be positive");
  const SqrtPlan plan{n, blocks_override.value_or(ceil_div(n, m)), m};
  validate(plan);
  return plan;
}

Poly sqrt_block_iter(const BlockSeries& f, const Poly& g0, const Poly& h, std::size_t r,
                     TransformLedger& ledger, SqrtTrace* trace) {
  return run_block_sqrt(f, g0, h, r, ledger, trace).g.recompose();
}

Poly series_sqrt(const Poly& f, std::size_t n, CostLedger& ledger,
                 std::optional<std::size_t> blocks_override) {
  return series_sqrt(f, choose_sqrt_params(n, blocks_override), ledger);
}

Poly series_sqrt(const Poly& f, const SqrtPlan& plan, CostLedger& ledger) {
  detail::require_unit_constant(f, "series_sqrt");
  validate(plan);
  const SqrtPair base = sqrt_newton_coupled(f.truncated(plan.m), plan.m, ledger.base);
  const BlockSeries blocks = BlockSeries::decompose(f, plan.m, plan.r);
  return sqrt_block_iter(blocks, base.root, base.inverse, plan.r, ledger.block).truncated(plan.n);
}

SqrtPlan choose_sqrt_rem_params(std::size_t n, std::optional<std::size_t> blocks_override) {
  const std::size_t precision = n + 1;
  const SqrtPlan target = choose_sqrt_params(precision, blocks_override);

  std::vector<std::size_t> sizes;
  for (std::size_t p3 = 1; p3 <= target.m; p3 *= 3) {
    for (std::size_t c = p3; c <= target.m; c *= 2) sizes.push_back(c);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  // m = 1 always qualifies, so the search terminates.
  for (const std::size_t m : sizes) {
    const std::size_t q = n % m;
    if (2 * q < m || q == m - 1) return {precision, ceil_div(precision, m), m};
  }
  throw std::logic_error("choose_sqrt_rem_params: no block size found");
}

SqrtRemainder sqrt_rem(const Poly& f, CostLedger& ledger, std::optional<std::size_t> blocks_override) {
  std::size_t size = f.size();
  while (size > 0 && f[size - 1] == Complex{}) --size;
  if (size == 0) throw std::invalid_argument("sqrt_rem: zero polynomial");
  const std::size_t degree = size - 1;
  if (degree % 2 != 0) throw std::invalid_argument("sqrt_rem: degree must be even");
  if (std::abs(f[degree] - Complex{1.0, 0.0}) > detail::kUnitTolerance) {
    throw std::invalid_argument("sqrt_rem: polynomial must be monic");
  }
  const std::size_t n = degree / 2;
  const SqrtPlan plan = choose_sqrt_rem_params(n, blocks_override);
  const std::size_t m = plan.m;
  const std::size_t r = plan.r;

  // f~(x) = x^{2n} f(1/x) has constant term 1; g~ = f~^{1/2} mod x^{n+1}.
  Poly reversed(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) reversed[i] = f[degree - i];

  const SqrtPair base = sqrt_newton_coupled(reversed.truncated(m), m, ledger.base);
  const BlockSeries blocks = BlockSeries::decompose(reversed, m, r);
  BlockRoot root = run_block_sqrt(blocks, base.root, base.inverse, r, ledger.block, nullptr);

  // Cut the root after coefficient n. Only block r-1 changes, and its
  // spectrum has not been computed yet.
  Poly root_rev = root.g.recompose().truncated(n + 1);
  BlockSeries cut = BlockSeries::decompose(root_rev, m, r);
  ensure_transform(root.cache, cut, r - 1, ledger.block);

  // Coefficients n+1..2n of g~^2 live in the r blocks starting at (n+1)/m.
  const std::size_t first = (n + 1) / m;
  Poly square_top((first + r) * m);
  for (std::size_t k = first; k < first + r; ++k) {
    const Poly blk = product_block(root.cache, root.cache, k, ledger.block, r, r);
    for (std::size_t j = 0; j < m; ++j) square_top[k * m + j] = blk[j];
  }

  SqrtRemainder out{Poly(n + 1), Poly(n), plan};
  for (std::size_t j = 0; j <= n; ++j) out.root[j] = root_rev[n - j];
  // (g^2)_j = (g~^2)_{2n-j}
  for (std::size_t j = 0; j < n; ++j) out.remainder[j] = f[j] - square_top[degree - j];
  return out;
}

}  // namespace fastseries
