#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fastseries/blockwise.hpp"
#include "fastseries/ledger.hpp"
#include "fastseries/poly.hpp"

namespace fastseries {

// Blocking of a reciprocal to precision n: the output covers 3s blocks of m.
struct RecipPlan {
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t m = 0;

  friend bool operator==(const RecipPlan&, const RecipPlan&) = default;
};

// s = override, or clamp(round(log2(n) / 6), 1, 16); m = next_supported(ceil(n / 3s)).
RecipPlan choose_recip_params(std::size_t n, std::optional<std::size_t> s_override = {});

// Plan with a fixed block size m (3-smooth); s defaults to ceil(n / 3m).
RecipPlan recip_plan_with_block_size(std::size_t n, std::size_t m,
                                     std::optional<std::size_t> s_override = {});

struct RecipTrace {
  std::vector<Poly> psi;    // division loop: psi[k-1] = ((f_[0..k]) (g_[0..k-1]))_[k]
  std::vector<Poly> delta;  // d_[0..2s-1] once the fused pass has finished
};

// Blocks 0..3s-1 of f^{-1}, given g0 = f_[0]^{-1} mod X of length m.
//
// The first s blocks come from a blockwise division loop. With
// f g = 1 + delta X^s mod X^{3s} and delta = delta0 + delta1 X^s, the rest is
// one third-order Newton step g' = g (1 - delta X^s + delta^2 X^{2s}):
//   d_[0..s-1]  = -delta0                                  (s inverse)
//   d_[s..2s-1] = (d_low^2)_[k-s] - (f g)_[k+s]            (s inverse, fused)
//   g_[s..3s-1] = (d g)_[k-s]                              (2s inverse)
// Exactly 13s - 3 transforms of length 2m: 7s - 1 forward, 6s - 2 inverse.
Poly recip_block_iter(const BlockSeries& f, const Poly& g0, std::size_t s, TransformLedger& ledger,
                      RecipTrace* trace = nullptr);

// f^{-1} mod x^n for f(0) = 1. The first block comes from recip_schonhage and
// is ledgered under `ledger.base`.
Poly series_recip(const Poly& f, std::size_t n, CostLedger& ledger,
                  std::optional<std::size_t> s_override = {});
Poly series_recip(const Poly& f, const RecipPlan& plan, CostLedger& ledger);

// Applies one third-order Newton step to g = f^{-1} mod x^n with schoolbook
// arithmetic and returns max |f g' - 1| over the coefficients below 3n.
// Throws if f g differs from 1 mod x^n by more than 1e-8 n.
double third_order_step_residual(const Poly& g, const Poly& f, std::size_t n);

}  // namespace fastseries
