#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fastseries/oracle.hpp"
#include "fastseries/transform.hpp"
#include "test_support.hpp"

using namespace fastseries;

namespace {

std::vector<std::size_t> supported_up_to(std::size_t limit) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= limit; ++n) {
    if (is_supported(n)) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("forward: small frozen spectra") {
  TransformLedger ledger;
  const Spectrum one = forward(Poly{1.0}, 2, ledger);
  CHECK(max_abs_diff(test::as_poly(one), Poly{1.0, 1.0}) < 1e-15);

  const Spectrum x = forward(Poly{0.0, 1.0}, 2, ledger);
  CHECK(max_abs_diff(test::as_poly(x), Poly{1.0, -1.0}) < 1e-15);

  // [p(1), p(i), p(-1), p(-i)] for p = 1 + 2x + 3x^2 + 4x^3
  const Poly p{1.0, 2.0, 3.0, 4.0};
  const Spectrum s = forward(p, 4, ledger);
  const Poly expected{10.0, Complex{-2, -2}, -2.0, Complex{-2, 2}};
  CHECK(max_abs_diff(test::as_poly(s), expected) < 1e-14);
  CHECK(max_abs_diff(test::as_poly(s), test::naive_dft(p, 4)) < 1e-14);

  CHECK(ledger.forward_count(2) == 2);
  CHECK(ledger.forward_count(4) == 1);
  CHECK(ledger.total_inverse() == 0);
}

TEST_CASE("forward matches direct evaluation for every supported length up to 432") {
  std::mt19937_64 rng(7);
  TransformLedger ledger;
  for (const std::size_t n : supported_up_to(432)) {
    const Poly p = test::random_poly(rng, n);
    const Spectrum s = forward(p, n, ledger);
    CHECK_MESSAGE(max_abs_diff(test::as_poly(s), test::naive_dft(p, n)) < 1e-11, "n = ", n);
  }
}

TEST_CASE("inverse: frozen values and round trip") {
  TransformLedger ledger;
  CHECK(max_abs_diff(inverse(Spectrum({1.0, 1.0}), ledger), Poly{1.0, 0.0}) < 1e-15);
  CHECK(max_abs_diff(inverse(Spectrum({1.0, -1.0}), ledger), Poly{0.0, 1.0}) < 1e-15);
  CHECK(ledger.inverse_count(2) == 2);

  std::mt19937_64 rng(11);
  const Poly p = test::random_poly(rng, 8);
  CHECK(max_abs_diff(inverse(forward(p, 8, ledger), ledger), p) <= 1e-12);
}

TEST_CASE("round trip stays within 1e-10 for supported lengths up to 2^14") {
  std::mt19937_64 rng(12);
  TransformLedger ledger;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= (1u << 14); n = next_supported(n + 1)) {
    const Poly p = test::random_poly(rng, n);
    CHECK_MESSAGE(max_abs_diff(inverse(forward(p, n, ledger), ledger), p) <= 1e-10, "n = ", n);
    ++checked;
  }
  CHECK(checked > 60);
}

TEST_CASE("transform of X = x^m at length 2m is (-1)^j") {
  TransformLedger ledger;
  for (std::size_t m = 1; m <= 2048; m = next_supported(m + 1)) {
    Poly x(2 * m);
    x[m] = 1.0;
    const Spectrum s = forward(x, 2 * m, ledger);
    double err = 0.0;
    for (std::size_t j = 0; j < 2 * m; ++j) err = std::max(err, std::abs(s[j] - (j % 2 ? -1.0 : 1.0)));
    CHECK_MESSAGE(err <= 1e-12, "m = ", m);
  }
}

TEST_CASE("transform errors") {
  TransformLedger ledger;
  CHECK_THROWS_AS(forward(Poly{1.0}, 5, ledger), std::invalid_argument);
  CHECK_THROWS_AS(forward(Poly{1.0}, 10, ledger), std::invalid_argument);
  CHECK_THROWS_AS(forward(Poly{1.0}, 0, ledger), std::invalid_argument);
  CHECK_THROWS_AS(forward(Poly{1.0, 2.0, 3.0}, 2, ledger), std::invalid_argument);
  CHECK_THROWS_AS(forward(Poly{std::nan("")}, 2, ledger), std::invalid_argument);
  CHECK_THROWS_AS(inverse(Spectrum(10), ledger), std::invalid_argument);
  CHECK(ledger.total() == 0);
  // Trailing zeros beyond n are not a degree violation.
  CHECK_NOTHROW(forward(Poly{1.0, 0.0, 0.0}, 2, ledger));
}

TEST_CASE("pointwise_mul") {
  const Spectrum a({1.0, 1.0});
  const Spectrum b({1.0, -1.0});
  CHECK(pointwise_mul(a, b) == Spectrum({1.0, -1.0}));
  CHECK(pointwise_mul(Spectrum({2.0, 3.0}), Spectrum({0.0, 0.0})) == Spectrum({0.0, 0.0}));
  CHECK_THROWS_AS(pointwise_mul(a, Spectrum(3)), std::invalid_argument);

  // Convolution theorem against a schoolbook cyclic product.
  TransformLedger ledger;
  const Poly p{1.0, 1.0, 0.0, 0.0};
  const Poly q{1.0, 0.0, 1.0, 0.0};
  const Poly lhs = test::as_poly(pointwise_mul(forward(p, 4, ledger), forward(q, 4, ledger)));
  const Poly rhs = test::as_poly(forward(test::cyclic_schoolbook(p, q, 4), 4, ledger));
  CHECK(max_abs_diff(lhs, rhs) < 1e-14);
}

TEST_CASE("cyclic_convolution: frozen examples and ledger") {
  TransformLedger ledger;
  CHECK(max_abs_diff(cyclic_convolution(Poly{1.0, 1.0}, Poly{1.0, 1.0}, 2, ledger), Poly{2.0, 2.0}) < 1e-15);
  CHECK(max_abs_diff(cyclic_convolution(Poly{0.0, 1.0}, Poly{0.0, 1.0}, 2, ledger), Poly{1.0, 0.0}) < 1e-15);
  const Poly g2{Complex{0.5, 1}, -2.0, 3.0};
  CHECK(max_abs_diff(cyclic_convolution(Poly{1.0, 0.0, 0.0, 0.0}, g2, 4, ledger), g2.truncated(4)) < 1e-15);
  CHECK(ledger.forward_count(2) == 4);
  CHECK(ledger.inverse_count(2) == 2);
  CHECK(ledger.forward_count(4) == 2);
  CHECK(ledger.inverse_count(4) == 1);
  CHECK_THROWS_AS(cyclic_convolution(Poly{1.0}, Poly{1.0}, 7, ledger), std::invalid_argument);
}

TEST_CASE("property: convolution theorem for random inputs") {
  std::mt19937_64 rng(21);
  for (const std::size_t n : {2u, 3u, 6u, 16u, 54u, 96u, 243u, 512u}) {
    TransformLedger ledger;
    const Poly a = test::random_poly(rng, n);
    const Poly b = test::random_poly(rng, n);
    const Poly c = cyclic_convolution(a, b, n, ledger);
    const double tol = 1e-9 * static_cast<double>(n) * (1.0 + std::max(a.max_abs(), b.max_abs()));
    CHECK_MESSAGE(max_abs_diff(c, test::cyclic_schoolbook(a, b, n)) <= tol, "n = ", n);
    CHECK(ledger.forward_count(n) == 2);
    CHECK(ledger.inverse_count(n) == 1);
    CHECK(ledger.total() == 3);
  }
}

TEST_CASE("middle_product: frozen examples") {
  TransformLedger ledger;
  // (1 + 2x + 3x^2 + 4x^3)(5 + 6x) = 5 + 16x + 27x^2 + 38x^3 + 24x^4
  CHECK(max_abs_diff(middle_product(Poly{1.0, 2.0, 3.0, 4.0}, Poly{5.0, 6.0}, 2, ledger), Poly{27.0, 38.0}) < 1e-13);
  CHECK(ledger.forward_count(4) == 2);
  CHECK(ledger.inverse_count(4) == 1);

  std::mt19937_64 rng(3);
  const Poly h = test::random_poly(rng, 6);
  Poly shift(12);
  shift[6] = 1.0;
  CHECK(max_abs_diff(middle_product(shift, h, 6, ledger), h) < 1e-14);
  CHECK(middle_product(Poly(12), h, 6, ledger).max_abs() == 0.0);

  CHECK_THROWS_AS(middle_product(test::random_poly(rng, 5), Poly{1.0}, 2, ledger), std::invalid_argument);
  CHECK_THROWS_AS(middle_product(Poly{1.0}, Poly{1.0, 1.0, 1.0}, 2, ledger), std::invalid_argument);
  CHECK_THROWS_AS(middle_product(Poly{1.0}, Poly{1.0}, 5, ledger), std::invalid_argument);
}

TEST_CASE("property: middle product equals the schoolbook window up to 2^12") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 4096; n = next_supported(n + 1)) {
    TransformLedger ledger;
    const Poly g = test::random_poly(rng, 2 * n);
    const Poly h = test::random_poly(rng, n);
    const double tol = 1e-9 * static_cast<double>(n);
    const Poly fast = middle_product(g, h, n, ledger);
    if (n <= 1024) {
      CHECK_MESSAGE(max_abs_diff(fast, oracle::middle_product_naive(g, h, n)) <= tol, "n = ", n);
    } else {
      // Spot-check a few coefficients of the window to keep the test fast.
      for (const std::size_t c : {n, n + n / 3, 2 * n - 1}) {
        Complex want{};
        for (std::size_t j = 0; j < n; ++j) {
          if (c >= j && c - j < 2 * n) want += g[c - j] * h[j];
        }
        CHECK(std::abs(fast[c - n] - want) <= tol);
      }
    }
    CHECK(ledger.forward_count(2 * n) == 2);
    CHECK(ledger.inverse_count(2 * n) == 1);
    CHECK(ledger.total() == 3);
  }
}

TEST_CASE("next_supported") {
  CHECK(next_supported(1) == 1);
  CHECK(next_supported(5) == 6);
  CHECK(next_supported(8) == 8);
  CHECK(next_supported(25) == 27);
  CHECK(next_supported(100) == 108);
  CHECK(next_supported(8193) == 8748);
  // Brute-force enumeration of 3-smooth numbers as the reference.
  for (std::size_t n = 1; n <= 5000; ++n) {
    std::size_t want = n;
    while (!is_supported(want)) ++want;
    REQUIRE(next_supported(n) == want);
  }
}

TEST_CASE("supported lengths are closed under doubling") {
  for (const std::size_t n : supported_up_to(10000)) CHECK(is_supported(2 * n));
}

TEST_CASE("multiply gives the full product") {
  std::mt19937_64 rng(8);
  TransformLedger ledger;
  const Poly a = test::random_poly(rng, 37);
  const Poly b = test::random_poly(rng, 20);
  CHECK(max_abs_diff(multiply(a, b, ledger), oracle::mul_schoolbook(a, b)) < 1e-12);
  CHECK(ledger.forward_count(next_supported(56)) == 2);
}

TEST_CASE("twiddle fault is visible and scoped") {
  std::mt19937_64 rng(9);
  const Poly p = test::random_poly(rng, 64);
  TransformLedger ledger;
  {
    const testing::ScopedTwiddleFault fault;
    CHECK(max_abs_diff(test::as_poly(forward(p, 64, ledger)), test::naive_dft(p, 64)) > 1e-3);
  }
  CHECK(max_abs_diff(test::as_poly(forward(p, 64, ledger)), test::naive_dft(p, 64)) < 1e-12);
}
