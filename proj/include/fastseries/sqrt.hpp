#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fastseries/blockwise.hpp"
#include "fastseries/ledger.hpp"
#include "fastseries/poly.hpp"

namespace fastseries {

// Blocking of a square root to precision n: r blocks of m coefficients.
struct SqrtPlan {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t m = 0;

  friend bool operator==(const SqrtPlan&, const SqrtPlan&) = default;
};

// r = override, or clamp(round(log2(n) / 2), 1, 32); m = next_supported(ceil(n / r)).
SqrtPlan choose_sqrt_params(std::size_t n, std::optional<std::size_t> blocks_override = {});

// Plan with a fixed block size m (3-smooth); r defaults to ceil(n / m).
SqrtPlan sqrt_plan_with_block_size(std::size_t n, std::size_t m,
                                   std::optional<std::size_t> blocks_override = {});

// Intermediate values of the blockwise iteration, for checking its invariants.
struct SqrtTrace {
  std::vector<Poly> psi;  // psi[k-1] = ((g_[0] + ... + g_[k-1] X^{k-1})^2)_[k]
};

// Blocks 0..r-1 of f^{1/2}, given g0 = f_[0]^{1/2} mod X and h = g0^{-1} mod X
// (both of length m). Iteration k squares the known blocks to get psi, then
// sets g_[k] = h (f_[k] - psi) / 2 mod X. Uses exactly 4r - 3 transforms of
// length 2m: F(h) once, then per iteration F(g_[k-1]), one inverse for psi,
// F(f_[k] - psi) and one inverse for g_[k].
Poly sqrt_block_iter(const BlockSeries& f, const Poly& g0, const Poly& h, std::size_t r,
                     TransformLedger& ledger, SqrtTrace* trace = nullptr);

// f^{1/2} mod x^n for f(0) = 1. The first block and its inverse come from the
// coupled Newton baseline and are ledgered under `ledger.base`.
Poly series_sqrt(const Poly& f, std::size_t n, CostLedger& ledger,
                 std::optional<std::size_t> blocks_override = {});
Poly series_sqrt(const Poly& f, const SqrtPlan& plan, CostLedger& ledger);

struct SqrtRemainder {
  Poly root;       // monic, degree n (length n + 1)
  Poly remainder;  // length n, f = root^2 + remainder
  SqrtPlan plan;   // blocking used for the reversed series, plan.n = n + 1
};

// Plan for square root with remainder of a monic polynomial of degree 2n.
// Chooses m so that the top n coefficients of the squared root fall in
// exactly r blocks: either m divides n + 1, or n mod m < m / 2.
SqrtPlan choose_sqrt_rem_params(std::size_t n, std::optional<std::size_t> blocks_override = {});

// For monic f of even degree 2n: g monic of degree n and remainder of degree
// < n with f = g^2 + remainder. Runs the blockwise square root on the
// reversed polynomial, then squares the root with the cached block spectra.
// Over a plain blockwise square root this costs r inverse and 1 forward
// transform of length 2m.
SqrtRemainder sqrt_rem(const Poly& f, CostLedger& ledger,
                       std::optional<std::size_t> blocks_override = {});

}  // namespace fastseries
