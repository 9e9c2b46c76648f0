#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>

#include "fastseries/poly.hpp"

namespace fastseries::app {

// PCG XSL-RR 128/64 (the generator usually called pcg64). Seeded the same way
// as the reference implementation with the default stream, so a seed gives the
// same stream in any language.
class Pcg64 {
 public:
  using result_type = std::uint64_t;
  static constexpr std::string_view kName = "pcg64";

  explicit Pcg64(std::uint64_t seed, std::uint64_t stream = 0xda3e39cb94b95bdbULL);

  result_type operator()();
  // Uniform in [lo, hi) from the top 53 bits of one output.
  double uniform(double lo, double hi);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

 private:
  __extension__ using u128 = unsigned __int128;
  void step();

  u128 state_ = 0;
  u128 inc_ = 0;
};

// 1 + a_1 x + ... + a_{n-1} x^{n-1}, a_i uniform in [-1/4, 1/4].
Poly random_unit_series(std::uint64_t seed, std::size_t n);

// Like random_unit_series but a_i is divided by i^2. The coefficient sum stays
// below 1/2, so square roots and reciprocals have bounded coefficients at any
// precision. Useful where the error budget is absolute.
Poly random_tapered_series(std::uint64_t seed, std::size_t n);

// Monic polynomial of degree `degree` with the other coefficients uniform in
// [-1/4, 1/4].
Poly random_monic(std::uint64_t seed, std::size_t degree);

}  // namespace fastseries::app
