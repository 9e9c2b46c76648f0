#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fastseries {

using Complex = std::complex<double>;

// Dense coefficient sequence c_0 + c_1 x + ... over C. Used both for
// polynomials and for power series truncated to a fixed order. Trailing
// zeros are allowed and carry no meaning beyond the stored length.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t length) : coeffs_(length) {}
  Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {}
  explicit Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

  Complex& operator[](std::size_t i) { return coeffs_[i]; }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }

  // Coefficient i, or zero past the stored length.
  Complex coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : Complex{};
  }

  auto begin() noexcept { return coeffs_.begin(); }
  auto end() noexcept { return coeffs_.end(); }
  auto begin() const noexcept { return coeffs_.begin(); }
  auto end() const noexcept { return coeffs_.end(); }

  std::span<Complex> span() noexcept { return coeffs_; }
  std::span<const Complex> span() const noexcept { return coeffs_; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

  void resize(std::size_t n) { coeffs_.resize(n); }

  // Copy of coefficients [0, n), zero-padded when n exceeds size().
  Poly truncated(std::size_t n) const;

  // Copy of coefficients [first, first + count), zero-padded.
  Poly slice(std::size_t first, std::size_t count) const;

  bool all_finite() const noexcept;
  double max_abs() const noexcept;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Complex> coeffs_;
};

// max_i |a_i - b_i|, missing coefficients read as zero.
double max_abs_diff(const Poly& a, const Poly& b) noexcept;

// Evaluations of a polynomial at the n-th roots of unity, in natural order.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::size_t length) : values_(length) {}
  explicit Spectrum(std::vector<Complex> values) : values_(std::move(values)) {}

  std::size_t length() const noexcept { return values_.size(); }

  Complex& operator[](std::size_t j) { return values_[j]; }
  const Complex& operator[](std::size_t j) const { return values_[j]; }

  std::span<Complex> span() noexcept { return values_; }
  std::span<const Complex> span() const noexcept { return values_; }
  const std::vector<Complex>& values() const noexcept { return values_; }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<Complex> values_;
};

}  // namespace fastseries
