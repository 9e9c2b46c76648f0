#pragma once

#include <cstddef>

#include "fastseries/poly.hpp"

// Slow reference arithmetic. Nothing in here touches the transform code, so
// agreement between these routines and the fast paths is an independent check.
namespace fastseries::oracle {

// Exact convolution; length |f| + |g| - 1 (empty if either input is empty).
Poly mul_schoolbook(const Poly& f, const Poly& g);

// Coefficients of f^{1/2} mod x^n solved one at a time:
//   2 g_0 g_k = f_k - sum_{0<i<k} g_i g_{k-i},  g_0 = 1.
// Requires f(0) = 1.
Poly sqrt_recurrence(const Poly& f, std::size_t n);

// f^{-1} mod x^n from g_k = -sum_{i=1..k} f_i g_{k-i}. Requires f(0) = 1.
Poly recip_recurrence(const Poly& f, std::size_t n);

// Coefficients n..2n-1 of g*h, requiring deg g < 2n and deg h < n.
Poly middle_product_naive(const Poly& g, const Poly& h, std::size_t n);

}  // namespace fastseries::oracle
