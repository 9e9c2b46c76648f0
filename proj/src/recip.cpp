#include "fastseries/recip.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "checks.hpp"
#include "fastseries/baselines.hpp"
#include "fastseries/oracle.hpp"
#include "fastseries/transform.hpp"

namespace fastseries {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

void validate(const RecipPlan& plan) {
  if (plan.n < 1) throw std::invalid_argument("RecipPlan: precision must be at least 1");
  if (plan.s < 1) throw std::invalid_argument("RecipPlan: s must be at least 1");
  if (plan.m < 1 || !is_supported(2 * plan.m)) {
    throw std::invalid_argument("RecipPlan: block size " + std::to_string(plan.m) + " is not 3-smooth");
  }
  if (3 * plan.s * plan.m < plan.n) throw std::invalid_argument("RecipPlan: 3 s m must cover n");
}

Poly negated(Poly p) {
  for (Complex& c : p) c = -c;
  return p;
}

}  // namespace

RecipPlan choose_recip_params(std::size_t n, std::optional<std::size_t> s_override) {
  detail::require_positive_precision(n, "choose_recip_params");
  std::size_t s = 0;
  if (s_override) {
    if (*s_override < 1) throw std::invalid_argument("choose_recip_params: s override must be >= 1");
    s = *s_override;
  } else {
    const long rounded = std::lround(std::log2(static_cast<double>(n)) / 6.0);
    s = static_cast<std::size_t>(std::clamp(rounded, 1L, 16L));
  }
  return {n, s, next_supported(ceil_div(n, 3 * s))};
}

RecipPlan recip_plan_with_block_size(std::size_t n, std::size_t m, std::optional<std::size_t> s_override) {
  detail::require_positive_precision(n, "recip_plan_with_block_size");
  if (m < 1) throw std::invalid_argument("recip_plan_with_block_size: block size must be positive");
  const RecipPlan plan{n, s_override.value_or(ceil_div(n, 3 * m)), m};
  validate(plan);
  return plan;
}

Poly recip_block_iter(const BlockSeries& f, const Poly& g0, std::size_t s, TransformLedger& ledger,
                      RecipTrace* trace) {
  const std::size_t m = f.block_size();
  if (s < 1) throw std::invalid_argument("recip_block_iter: s must be at least 1");
  if (f.num_blocks() < 3 * s) throw std::invalid_argument("recip_block_iter: f has fewer than 3s blocks");
  if (g0.size() != m) throw std::invalid_argument("recip_block_iter: g0 must have the block size of f");
  detail::require_unit_constant(f.block(0), "recip_block_iter");

  const std::size_t len = 2 * m;
  BlockSeries g(m);
  TransformCache g_cache(m);
  TransformCache f_cache(m);
  g.append(g0);
  ensure_transform(g_cache, g, 0, ledger);
  for (std::size_t i = 0; i < 3 * s; ++i) ensure_transform(f_cache, f, i, ledger);

  // Division loop: g_[k] = -g_[0] psi mod X.
  for (std::size_t k = 1; k < s; ++k) {
    const Poly psi = product_block(f_cache, g_cache, k, ledger, k + 1, k);
    const Spectrum psi_spec = forward(psi, len, ledger);
    const Poly prod = inverse(pointwise_mul(g_cache.at(0), psi_spec), ledger);
    g.append(negated(prod.truncated(m)));
    ensure_transform(g_cache, g, k, ledger);
    if (trace) trace->psi.push_back(psi);
  }

  // d_[0..s-1] = -delta0, with delta0 = (f g)_[s..2s-1].
  BlockSeries d(m);
  TransformCache d_cache(m);
  for (std::size_t k = 0; k < s; ++k) {
    d.append(negated(product_block(f_cache, g_cache, k + s, ledger, 3 * s, s)));
    ensure_transform(d_cache, d, k, ledger);
  }

  // d_[s..2s-1] = delta0^2 - delta1 mod X^s, one inverse per block.
  const auto sd = static_cast<std::ptrdiff_t>(s);
  for (std::size_t k = s; k < 2 * s; ++k) {
    const std::array terms{
        BlockTerm{&d_cache, &d_cache, +1, -sd, s, s},
        BlockTerm{&f_cache, &g_cache, -1, +sd, 3 * s, s},
    };
    d.append(combined_block(terms, k, ledger));
    ensure_transform(d_cache, d, k, ledger);
  }
  if (trace) {
    for (std::size_t k = 0; k < 2 * s; ++k) trace->delta.push_back(d.block(k));
  }

  // g' = g (1 + d X^s): blocks s..3s-1 are (d g)_[k-s].
  for (std::size_t k = s; k < 3 * s; ++k) g.append(product_block(d_cache, g_cache, k - s, ledger, 2 * s, s));
  return g.recompose();
}

Poly series_recip(const Poly& f, std::size_t n, CostLedger& ledger, std::optional<std::size_t> s_override) {
  return series_recip(f, choose_recip_params(n, s_override), ledger);
}

Poly series_recip(const Poly& f, const RecipPlan& plan, CostLedger& ledger) {
  detail::require_unit_constant(f, "series_recip");
  validate(plan);
  const Poly g0 = recip_schonhage(f.truncated(plan.m), plan.m, ledger.base);
  const BlockSeries blocks = BlockSeries::decompose(f, plan.m, 3 * plan.s);
  return recip_block_iter(blocks, g0, plan.s, ledger.block).truncated(plan.n);
}

double third_order_step_residual(const Poly& g, const Poly& f, std::size_t n) {
  detail::require_positive_precision(n, "third_order_step_residual");
  const Poly low = g.truncated(n);
  const Poly fg = oracle::mul_schoolbook(f.truncated(3 * n), low).truncated(3 * n);
  double defect = std::abs(fg[0] - Complex{1.0, 0.0});
  for (std::size_t i = 1; i < n; ++i) defect = std::max(defect, std::abs(fg[i]));
  if (defect > 1e-8 * static_cast<double>(n)) {
    throw std::invalid_argument("third_order_step_residual: g is not f^{-1} mod x^n");
  }

  // f g = 1 + delta x^n mod x^{3n}; correction = 1 - delta x^n + delta^2 x^{2n}.
  const Poly delta = fg.slice(n, 2 * n);
  const Poly delta_sq = oracle::mul_schoolbook(delta, delta);
  Poly correction(3 * n);
  correction[0] = 1.0;
  for (std::size_t i = 0; i < 2 * n; ++i) correction[n + i] -= delta[i];
  for (std::size_t i = 0; i < n; ++i) correction[2 * n + i] += delta_sq[i];

  const Poly next = oracle::mul_schoolbook(low, correction).truncated(3 * n);
  const Poly check = oracle::mul_schoolbook(f.truncated(3 * n), next).truncated(3 * n);
  double residual = std::abs(check[0] - Complex{1.0, 0.0});
  for (std::size_t i = 1; i < 3 * n; ++i) residual = std::max(residual, std::abs(check[i]));
  return residual;
}

}  // namespace fastseries
