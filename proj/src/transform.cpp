#include "fastseries/transform.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fastseries {

namespace {

std::atomic<int> g_twiddle_faults{0};

inline Complex times_i(const Complex& z) { return {-z.imag(), z.real()}; }

// Self-sorting (Stockham) mixed-radix transform. Each stage splits the current
// sub-transform of length `len` into `p` interleaved pieces of length len/p,
// so the output lands in natural order without a digit-reversal pass.
class FftPlan {
 public:
  FftPlan(std::size_t n, bool faulty) : n_(n), roots_(n) {
    std::size_t rest = n;
    while (rest % 4 == 0) { radices_.push_back(4); rest /= 4; }
    while (rest % 2 == 0) { radices_.push_back(2); rest /= 2; }
    while (rest % 3 == 0) { radices_.push_back(3); rest /= 3; }
    if (rest != 1) throw std::invalid_argument("FftPlan: length is not 3-smooth");

    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) roots_[j] = std::polar(1.0, step * static_cast<double>(j));
    if (faulty && n > 1) roots_[1] = -roots_[1];
  }

  void execute(std::span<Complex> data, bool inverse) const {
    if (n_ == 1) return;
    std::vector<Complex> work(n_);
    Complex* x = data.data();
    Complex* y = work.data();
    std::size_t len = n_;
    std::size_t stride = 1;
    for (const unsigned p : radices_) {
      const std::size_t m = len / p;
      switch (p) {
        case 4: radix4(x, y, m, stride, inverse); break;
        case 2: radix2(x, y, m, stride, inverse); break;
        default: radix3(x, y, m, stride, inverse); break;
      }
      std::swap(x, y);
      len = m;
      stride *= p;
    }
    if (x != data.data()) std::copy_n(x, n_, data.data());
    if (inverse) {
      const double scale = 1.0 / static_cast<double>(n_);
      for (Complex& c : data) c *= scale;
    }
  }

 private:
  Complex twiddle(std::size_t idx, bool inverse) const {
    return inverse ? std::conj(roots_[idx]) : roots_[idx];
  }

  void radix2(const Complex* x, Complex* y, std::size_t m, std::size_t s, bool inverse) const {
    for (std::size_t k = 0; k < m; ++k) {
      const Complex w = twiddle(s * k, inverse);
      for (std::size_t q = 0; q < s; ++q) {
        const Complex a0 = x[q + s * k];
        const Complex a1 = x[q + s * (k + m)];
        y[q + s * (2 * k)] = a0 + a1;
        y[q + s * (2 * k + 1)] = (a0 - a1) * w;
      }
    }
  }

  void radix3(const Complex* x, Complex* y, std::size_t m, std::size_t s, bool inverse) const {
    // exp(±2πi/3) = -1/2 ± i·sqrt(3)/2
    const double sin60 = (inverse ? -0.5 : 0.5) * std::numbers::sqrt3;
    for (std::size_t k = 0; k < m; ++k) {
      const Complex w1 = twiddle(s * k, inverse);
      const Complex w2 = twiddle(2 * s * k, inverse);
      for (std::size_t q = 0; q < s; ++q) {
        const Complex a0 = x[q + s * k];
        const Complex a1 = x[q + s * (k + m)];
        const Complex a2 = x[q + s * (k + 2 * m)];
        const Complex t1 = a1 + a2;
        const Complex t2 = a0 - 0.5 * t1;
        const Complex t3 = times_i(a1 - a2) * sin60;
        y[q + s * (3 * k)] = a0 + t1;
        y[q + s * (3 * k + 1)] = (t2 + t3) * w1;
        y[q + s * (3 * k + 2)] = (t2 - t3) * w2;
      }
    }
  }

  void radix4(const Complex* x, Complex* y, std::size_t m, std::size_t s, bool inverse) const {
    for (std::size_t k = 0; k < m; ++k) {
      const Complex w1 = twiddle(s * k, inverse);
      const Complex w2 = twiddle(2 * s * k, inverse);
      const Complex w3 = twiddle(3 * s * k, inverse);
      for (std::size_t q = 0; q < s; ++q) {
        const Complex a0 = x[q + s * k];
        const Complex a1 = x[q + s * (k + m)];
        const Complex a2 = x[q + s * (k + 2 * m)];
        const Complex a3 = x[q + s * (k + 3 * m)];
        const Complex t0 = a0 + a2;
        const Complex t1 = a0 - a2;
        const Complex t2 = a1 + a3;
        const Complex t3 = inverse ? -times_i(a1 - a3) : times_i(a1 - a3);
        y[q + s * (4 * k)] = t0 + t2;
        y[q + s * (4 * k + 1)] = (t1 + t3) * w1;
        y[q + s * (4 * k + 2)] = (t0 - t2) * w2;
        y[q + s * (4 * k + 3)] = (t1 - t3) * w3;
      }
    }
  }

  std::size_t n_;
  std::vector<unsigned> radices_;
  std::vector<Complex> roots_;  // roots_[j] = exp(2πij/n)
};

// Plans are immutable once built and live for the whole process.
const FftPlan& plan_for(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, bool>, std::unique_ptr<const FftPlan>> plans;
  const bool faulty = g_twiddle_faults.load() > 0;
  const std::lock_guard lock(mutex);
  auto& slot = plans[{n, faulty}];
  if (!slot) slot = std::make_unique<const FftPlan>(n, faulty);
  return *slot;
}

void require_supported(std::size_t n, const char* what) {
  if (!is_supported(n)) {
    throw std::invalid_argument(std::string(what) + ": unsupported transform length " +
                                std::to_string(n));
  }
}

}  // namespace

bool is_supported(std::size_t n) noexcept {
  if (n == 0) return false;
  while (n % 2 == 0) n /= 2;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

std::size_t next_supported(std::size_t n) {
  if (n <= 1) return 1;
  std::size_t best = 0;
  // Walk the powers of three; for each, the smallest power of two reaching n.
  for (std::size_t p3 = 1;; p3 *= 3) {
    std::size_t candidate = p3;
    while (candidate < n) candidate *= 2;
    if (best == 0 || candidate < best) best = candidate;
    if (p3 >= n) break;
  }
  return best;
}

Spectrum forward(const Poly& p, std::size_t n, TransformLedger& ledger) {
  require_supported(n, "forward");
  if (!p.all_finite()) throw std::invalid_argument("forward: non-finite coefficient");
  for (std::size_t i = n; i < p.size(); ++i) {
    if (p[i] != Complex{}) throw std::invalid_argument("forward: degree is not below the transform length");
  }
  std::vector<Complex> values(n);
  std::copy_n(p.begin(), std::min(n, p.size()), values.begin());
  plan_for(n).execute(values, false);
  ledger.record_forward(n);
  return Spectrum(std::move(values));
}

Poly inverse(const Spectrum& s, TransformLedger& ledger) {
  const std::size_t n = s.length();
  require_supported(n, "inverse");
  std::vector<Complex> coeffs = s.values();
  plan_for(n).execute(coeffs, true);
  ledger.record_inverse(n);
  return Poly(std::move(coeffs));
}

Spectrum pointwise_mul(const Spectrum& a, const Spectrum& b) {
  if (a.length() != b.length()) throw std::invalid_argument("pointwise_mul: length mismatch");
  Spectrum out(a.length());
  for (std::size_t j = 0; j < a.length(); ++j) out[j] = a[j] * b[j];
  return out;
}

Poly cyclic_convolution(const Poly& g1, const Poly& g2, std::size_t n, TransformLedger& ledger) {
  require_supported(n, "cyclic_convolution");
  const Spectrum a = forward(g1, n, ledger);
  const Spectrum b = forward(g2, n, ledger);
  return inverse(pointwise_mul(a, b), ledger);
}

Poly middle_product(const Poly& g, const Poly& h, std::size_t n, TransformLedger& ledger) {
  if (n == 0) throw std::invalid_argument("middle_product: block size must be positive");
  require_supported(2 * n, "middle_product");
  for (std::size_t i = 2 * n; i < g.size(); ++i) {
    if (g[i] != Complex{}) throw std::invalid_argument("middle_product: deg g must be < 2n");
  }
  for (std::size_t i = n; i < h.size(); ++i) {
    if (h[i] != Complex{}) throw std::invalid_argument("middle_product: deg h must be < n");
  }
  // g*h mod x^{2n} - 1 = (p0 + p2) + p1 x^n: the upper half is exactly p1.
  return cyclic_convolution(g, h, 2 * n, ledger).slice(n, n);
}

Poly multiply(const Poly& g1, const Poly& g2, TransformLedger& ledger) {
  if (g1.empty() || g2.empty()) return Poly{};
  const std::size_t len = g1.size() + g2.size() - 1;
  return cyclic_convolution(g1, g2, next_supported(len), ledger).truncated(len);
}

namespace testing {

ScopedTwiddleFault::ScopedTwiddleFault() { ++g_twiddle_faults; }
ScopedTwiddleFault::~ScopedTwiddleFault() { --g_twiddle_faults; }

}  // namespace testing

}  // namespace fastseries
