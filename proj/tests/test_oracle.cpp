#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fastseries/oracle.hpp"
#include "test_support.hpp"

using namespace fastseries;
using namespace fastseries::oracle;

TEST_CASE("mul_schoolbook") {
  CHECK(mul_schoolbook(Poly{1.0, 1.0}, Poly{1.0, 1.0}) == Poly{1.0, 2.0, 1.0});
  CHECK(mul_schoolbook(Poly{1.0, 2.0}, Poly{}).empty());
  CHECK(mul_schoolbook(Poly{1.0, 2.0, 3.0, 4.0}, Poly{5.0, 6.0}) == Poly{5.0, 16.0, 27.0, 38.0, 24.0});
}

TEST_CASE("sqrt_recurrence") {
  CHECK(sqrt_recurrence(Poly{1.0, 2.0, 1.0}, 5) == Poly{1.0, 1.0, 0.0, 0.0, 0.0});
  CHECK(sqrt_recurrence(Poly{1.0}, 3) == Poly{1.0, 0.0, 0.0});
  // g1 = 1/2, g2 = (0 - 1/4)/2, g3 = (0 - 2 (1/2)(-1/8))/2
  CHECK(sqrt_recurrence(Poly{1.0, 1.0}, 4) == Poly{1.0, 0.5, -0.125, 0.0625});
  CHECK_THROWS_AS(sqrt_recurrence(Poly{2.0, 1.0}, 4), std::invalid_argument);
  CHECK_THROWS_AS(sqrt_recurrence(Poly{}, 4), std::invalid_argument);
}

TEST_CASE("recip_recurrence") {
  CHECK(recip_recurrence(Poly{1.0, -1.0}, 5) == Poly{1.0, 1.0, 1.0, 1.0, 1.0});
  CHECK(recip_recurrence(Poly{1.0, 1.0}, 5) == Poly{1.0, -1.0, 1.0, -1.0, 1.0});
  // 1/(1 + x + x^2) = (1 - x)/(1 - x^3)
  CHECK(recip_recurrence(Poly{1.0, 1.0, 1.0}, 6) == Poly{1.0, -1.0, 0.0, 1.0, -1.0, 0.0});
  CHECK_THROWS_AS(recip_recurrence(Poly{0.0, 1.0}, 3), std::invalid_argument);
}

TEST_CASE("middle_product_naive") {
  CHECK(middle_product_naive(Poly{1.0, 2.0, 3.0, 4.0}, Poly{5.0, 6.0}, 2) == Poly{27.0, 38.0});
  CHECK(middle_product_naive(Poly(8), Poly{1.0, 2.0, 3.0}, 4) == Poly(4));
  const Poly g{1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
  CHECK(middle_product_naive(g, Poly{1.0, 0.0, 0.0}, 3) == Poly{4.0, 5.0, 6.0});
  CHECK_THROWS_AS(middle_product_naive(g, Poly{1.0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(middle_product_naive(Poly{1.0}, Poly{1.0, 1.0, 1.0}, 2), std::invalid_argument);
}

TEST_CASE("self-consistency: oracles invert squaring and multiplication") {
  std::mt19937_64 rng(17);
  for (const std::size_t n : {1u, 7u, 64u, 300u}) {
    const Poly f = test::tapered_unit_series(rng, n);
    const Poly g = sqrt_recurrence(f, n);
    const Poly h = recip_recurrence(f, n);
    const double tol = 1e-13 * static_cast<double>(n * n);
    CHECK(max_abs_diff(mul_schoolbook(g, g).truncated(n), f) <= tol);
    const Poly unit = mul_schoolbook(f, h).truncated(n);
    Poly one(n);
    one[0] = 1.0;
    CHECK(max_abs_diff(unit, one) <= tol);
  }
}
