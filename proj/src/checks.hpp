#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "fastseries/poly.hpp"

namespace fastseries::detail {

inline constexpr double kUnitTolerance = 1e-12;

// Series inputs are normalized to f(0) = 1; anything else is a caller error.
inline void require_unit_constant(const Poly& f, const char* what) {
  if (f.empty() || std::abs(f[0] - Complex{1.0, 0.0}) > kUnitTolerance) {
    throw std::invalid_argument(std::string(what) + ": constant term must be 1");
  }
}

inline void require_positive_precision(std::size_t n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": precision must be at least 1");
}

}  // namespace fastseries::detail
