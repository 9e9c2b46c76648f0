#include "fastseries/poly.hpp"

#include <algorithm>
#include <cmath>

namespace fastseries {

Poly Poly::truncated(std::size_t n) const { return slice(0, n); }

Poly Poly::slice(std::size_t first, std::size_t count) const {
  Poly out(count);
  if (first < coeffs_.size()) {
    const std::size_t avail = std::min(count, coeffs_.size() - first);
    std::copy_n(coeffs_.begin() + static_cast<std::ptrdiff_t>(first), avail, out.coeffs_.begin());
  }
  return out;
}

bool Poly::all_finite() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

double Poly::max_abs() const noexcept {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double max_abs_diff(const Poly& a, const Poly& b) noexcept {
  const std::size_t n = std::max(a.size(), b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a.coeff(i) - b.coeff(i)));
  return m;
}

}  // namespace fastseries
