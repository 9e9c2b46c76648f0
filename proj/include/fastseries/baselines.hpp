#pragma once

#include <cstddef>
#include <vector>

#include "fastseries/ledger.hpp"
#include "fastseries/poly.hpp"

namespace fastseries {

// Reciprocal by second-order Newton, g' = 2g - g^2 f. Each step that lifts a
// length-k approximation to length t <= 2k only needs coefficients k..t-1 of
// g^2 f, so the product is taken mod x^L - 1 with L = next_supported(k + t):
// wrap-around lands on the already-known low coefficients. Two forward and one
// inverse transform per step. Requires f(0) = 1.
Poly recip_schonhage(const Poly& f, std::size_t n, TransformLedger& ledger);

struct SqrtPair {
  Poly root;     // f^{1/2} mod x^n
  Poly inverse;  // f^{-1/2} mod x^n
};

// Square root and inverse square root lifted together: each step extends the
// root with the current inverse, then refines the inverse against the new
// root. Requires f(0) = 1.
SqrtPair sqrt_newton_coupled(const Poly& f, std::size_t n, TransformLedger& ledger);

// Precision ladder n, ceil(n/2), ..., 1 in increasing order.
std::vector<std::size_t> newton_ladder(std::size_t n);

}  // namespace fastseries
