#pragma once

#include <cstddef>

#include "fastseries/ledger.hpp"
#include "fastseries/poly.hpp"

namespace fastseries {

// Supported transform lengths are the 3-smooth integers 2^a 3^b. Block
// algorithms only ever use lengths 2m with m 3-smooth, so their transforms
// stay in the even subset, which is closed under doubling and has successive
// ratios tending to 1.
bool is_supported(std::size_t n) noexcept;

// Smallest supported length >= n (n >= 1).
std::size_t next_supported(std::size_t n);

// (forward(p, n))_j = p(exp(2 pi i j / n)). Requires every nonzero coefficient
// of p to have index < n. Records one forward transform of length n.
Spectrum forward(const Poly& p, std::size_t n, TransformLedger& ledger);

// Recovers the length-n coefficient vector from its evaluations. Records one
// inverse transform of length n.
Poly inverse(const Spectrum& s, TransformLedger& ledger);

Spectrum pointwise_mul(const Spectrum& a, const Spectrum& b);

// g1 * g2 mod x^n - 1 with two forward and one inverse transform of length n.
Poly cyclic_convolution(const Poly& g1, const Poly& g2, std::size_t n, TransformLedger& ledger);

// Middle product g ⋊_n h: coefficients n..2n-1 of g*h, for deg g < 2n and
// deg h < n. One cyclic convolution of length 2n with the low half discarded.
Poly middle_product(const Poly& g, const Poly& h, std::size_t n, TransformLedger& ledger);

// Full product g1 * g2 (length |g1| + |g2| - 1) through a cyclic convolution
// of length next_supported(|g1| + |g2| - 1).
Poly multiply(const Poly& g1, const Poly& g2, TransformLedger& ledger);

namespace testing {

// While alive, transforms use plans with the sign of one twiddle factor
// flipped. Exists so self-checks can prove they detect a broken FFT.
class ScopedTwiddleFault {
 public:
  ScopedTwiddleFault();
  ~ScopedTwiddleFault();
  ScopedTwiddleFault(const ScopedTwiddleFault&) = delete;
  ScopedTwiddleFault& operator=(const ScopedTwiddleFault&) = delete;
};

}  // namespace testing

}  // namespace fastseries
