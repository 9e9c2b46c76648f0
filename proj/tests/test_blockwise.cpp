#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "fastseries/blockwise.hpp"
#include "fastseries/oracle.hpp"
#include "fastseries/transform.hpp"
#include "test_support.hpp"

using namespace fastseries;

namespace {

struct Cached {
  BlockSeries series;
  TransformCache cache;

  Cached(const Poly& p, std::size_t m, std::size_t blocks, TransformLedger& ledger)
      : series(BlockSeries::decompose(p, m, blocks)), cache(m) {
    for (std::size_t i = 0; i < blocks; ++i) ensure_transform(cache, series, i, ledger);
  }
};

Poly schoolbook_block(const Poly& f, const Poly& g, std::size_t m, std::size_t k) {
  return oracle::mul_schoolbook(f, g).slice(k * m, m);
}

}  // namespace

TEST_CASE("decompose and recompose") {
  const BlockSeries s = BlockSeries::decompose(Poly{1.0, 2.0, 3.0, 4.0, 5.0}, 2, 3);
  REQUIRE(s.num_blocks() == 3);
  CHECK(s.block(0) == Poly{1.0, 2.0});
  CHECK(s.block(1) == Poly{3.0, 4.0});
  CHECK(s.block(2) == Poly{5.0, 0.0});

  const BlockSeries empty = BlockSeries::decompose(Poly{}, 4, 2);
  CHECK(empty.block(0) == Poly(4));
  CHECK(empty.block(1) == Poly(4));

  // Truncation past num_blocks * m.
  CHECK(BlockSeries::decompose(Poly{1.0, 2.0, 3.0}, 1, 2).recompose() == Poly{1.0, 2.0});
  CHECK_THROWS_AS(s.block(3), std::out_of_range);
  CHECK_THROWS_AS(BlockSeries(0), std::invalid_argument);

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 1 + rng() % 9;
    const std::size_t t = 1 + rng() % 6;
    const Poly f = test::random_poly(rng, rng() % (m * t + 1));
    CHECK(BlockSeries::decompose(f, m, t).recompose() == f.truncated(m * t));
  }
}

TEST_CASE("ensure_transform caches and is idempotent") {
  std::mt19937_64 rng(2);
  TransformLedger ledger;
  const BlockSeries s = BlockSeries::decompose(test::random_poly(rng, 24), 8, 3);
  TransformCache cache(8);
  const Spectrum first = ensure_transform(cache, s, 1, ledger);
  CHECK(ledger.forward_count(16) == 1);
  const Spectrum second = ensure_transform(cache, s, 1, ledger);
  CHECK(ledger.forward_count(16) == 1);
  CHECK(first == second);

  TransformLedger scratch;
  CHECK(max_abs_diff(test::as_poly(cache.at(1)), test::as_poly(forward(s.block(1), 16, scratch))) == 0.0);

  const BlockSeries zeros = BlockSeries::decompose(Poly{}, 8, 1);
  TransformCache zc(8);
  CHECK(test::as_poly(ensure_transform(zc, zeros, 0, ledger)).max_abs() == 0.0);

  CHECK_THROWS_AS(ensure_transform(cache, s, 3, ledger), std::out_of_range);
  TransformCache wrong(4);
  CHECK_THROWS_AS(ensure_transform(wrong, s, 0, ledger), std::invalid_argument);
}

TEST_CASE("TransformCache entries are write-once") {
  TransformCache cache(2);
  cache.store(0, Spectrum(4));
  CHECK_THROWS_AS(cache.store(0, Spectrum(4)), std::logic_error);
  CHECK_THROWS_AS(cache.store(1, Spectrum(3)), std::invalid_argument);
  CHECK_THROWS_AS(cache.at(1), std::out_of_range);
}

TEST_CASE("product_block: frozen examples") {
  TransformLedger ledger;
  // (1 + x)^2 = 1 + 2x + x^2 with m = 1
  const Cached f(Poly{1.0, 1.0}, 1, 2, ledger);
  const TransformLedger before = ledger;
  CHECK(max_abs_diff(product_block(f.cache, f.cache, 1, ledger), Poly{2.0}) < 1e-15);
  CHECK(max_abs_diff(product_block(f.cache, f.cache, 0, ledger), Poly{1.0}) < 1e-15);
  const TransformLedger delta = ledger.since(before);
  CHECK(delta.total_forward() == 0);
  CHECK(delta.inverse_count(2) == 2);

  const Poly c{Complex{0.3, -1}, 2.5};
  const Cached one(Poly{1.0, 0.0}, 2, 1, ledger);
  const Cached g(c, 2, 1, ledger);
  CHECK(max_abs_diff(product_block(one.cache, g.cache, 0, ledger), c) < 1e-15);
}

TEST_CASE("product_block at k = 0 is the middle product (X f_[0]) ⋊ g_[0]") {
  std::mt19937_64 rng(3);
  TransformLedger ledger;
  const std::size_t m = 6;
  const Poly f = test::random_poly(rng, m);
  const Poly g = test::random_poly(rng, m);
  const Cached fc(f, m, 1, ledger);
  const Cached gc(g, m, 1, ledger);
  Poly shifted(2 * m);
  for (std::size_t i = 0; i < m; ++i) shifted[m + i] = f[i];
  const Poly block0 = product_block(fc.cache, gc.cache, 0, ledger);
  CHECK(max_abs_diff(block0, oracle::middle_product_naive(shifted, g, m)) < 1e-13);
  CHECK(max_abs_diff(block0, schoolbook_block(f, g, m, 0)) < 1e-13);
}

TEST_CASE("product_block covers every block of a 4-block product, m = 8") {
  std::mt19937_64 rng(4);
  TransformLedger ledger;
  const Poly f = test::random_poly(rng, 32);
  const Poly g = test::random_poly(rng, 32);
  const Cached fc(f, 8, 4, ledger);
  const Cached gc(g, 8, 4, ledger);
  const TransformLedger before = ledger;
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(max_abs_diff(product_block(fc.cache, gc.cache, k, ledger), schoolbook_block(f, g, 8, k)) <= 1e-9);
  }
  // Transform economy: t blocks cost t inverse and no forward transforms.
  const TransformLedger delta = ledger.since(before);
  CHECK(delta.inverse_count(16) == 4);
  CHECK(delta.total_forward() == 0);
}

TEST_CASE("product_block with block limits treats later blocks as zero") {
  std::mt19937_64 rng(5);
  TransformLedger ledger;
  const Poly f = test::random_poly(rng, 20);
  const Poly g = test::random_poly(rng, 20);
  const Cached fc(f, 4, 5, ledger);
  const Cached gc(g, 4, 5, ledger);
  for (std::size_t k = 0; k < 8; ++k) {
    const Poly want = schoolbook_block(f.truncated(12), g.truncated(8), 4, k);
    CHECK(max_abs_diff(product_block(fc.cache, gc.cache, k, ledger, 3, 2), want) <= 1e-12);
  }
}

TEST_CASE("product_block reports missing cache entries") {
  TransformLedger ledger;
  const Cached f(Poly{1.0, 2.0}, 1, 2, ledger);
  TransformCache sparse(1);
  CHECK_THROWS_AS(product_block(f.cache, sparse, 0, ledger), std::out_of_range);
  CHECK_THROWS_AS(product_block(f.cache, f.cache, 2, ledger), std::out_of_range);
}

TEST_CASE("combined_block") {
  std::mt19937_64 rng(6);
  TransformLedger ledger;
  const std::size_t m = 4;
  const Poly d = test::random_poly(rng, 3 * m);
  const Poly f = test::random_poly(rng, 3 * m);
  const Poly g = test::random_poly(rng, 3 * m);
  const Cached dc(d, m, 3, ledger);
  const Cached fc(f, m, 3, ledger);
  const Cached gc(g, m, 3, ledger);

  for (std::size_t k = 0; k < 3; ++k) {
    const BlockTerm single{&fc.cache, &gc.cache};
    CHECK(max_abs_diff(combined_block(std::span(&single, 1), k, ledger), product_block(fc.cache, gc.cache, k, ledger)) ==
          0.0);

    const std::array cancel{BlockTerm{&fc.cache, &gc.cache, +1}, BlockTerm{&fc.cache, &gc.cache, -1}};
    CHECK(combined_block(cancel, k, ledger).max_abs() <= 1e-15);

    const std::array mixed{BlockTerm{&dc.cache, &dc.cache, +1}, BlockTerm{&fc.cache, &gc.cache, -1}};
    const TransformLedger before = ledger;
    const Poly got = combined_block(mixed, k, ledger);
    const Poly want = schoolbook_block(d, d, m, k);
    const Poly sub = schoolbook_block(f, g, m, k);
    Poly expected(m);
    for (std::size_t j = 0; j < m; ++j) expected[j] = want[j] - sub[j];
    CHECK(max_abs_diff(got, expected) <= 1e-9);
    CHECK(ledger.since(before).total() == 1);
  }

  TransformCache other(2);
  const std::array bad{BlockTerm{&fc.cache, &gc.cache}, BlockTerm{&other, &other}};
  CHECK_THROWS_AS(combined_block(bad, 0, ledger), std::invalid_argument);
  const BlockTerm negative{&fc.cache, &gc.cache, 1, -2};
  CHECK_THROWS_AS(combined_block(std::span(&negative, 1), 1, ledger), std::invalid_argument);
}

TEST_CASE("combined_block with shifted terms and many terms costs one inverse") {
  std::mt19937_64 rng(7);
  TransformLedger ledger;
  const std::size_t m = 3;
  const Poly f = test::random_poly(rng, 6 * m);
  const Poly g = test::random_poly(rng, 6 * m);
  const Cached fc(f, m, 6, ledger);
  const Cached gc(g, m, 6, ledger);
  std::vector<BlockTerm> terms;
  for (int t = 0; t < 5; ++t) terms.push_back(BlockTerm{&fc.cache, &gc.cache, t % 2 ? -1 : 1, t - 2});
  const TransformLedger before = ledger;
  const Poly got = combined_block(terms, 3, ledger);
  CHECK(ledger.since(before).inverse_count(2 * m) == 1);
  CHECK(ledger.since(before).total() == 1);

  const Poly full = oracle::mul_schoolbook(f, g);
  Poly expected(m);
  for (int t = 0; t < 5; ++t) {
    const Poly blk = full.slice(static_cast<std::size_t>(3 + t - 2) * m, m);
    for (std::size_t j = 0; j < m; ++j) expected[j] += (t % 2 ? -1.0 : 1.0) * blk[j];
  }
  CHECK(max_abs_diff(got, expected) <= 1e-12);
}

TEST_CASE("property: product_block agrees with schoolbook over many shapes") {
  std::mt19937_64 rng(8);
  for (const std::size_t m : {1u, 2u, 4u, 8u, 16u}) {
    for (std::size_t k = 0; k <= 8; ++k) {
      TransformLedger ledger;
      const Poly f = test::random_poly(rng, (k + 1) * m);
      const Poly g = test::random_poly(rng, (k + 1) * m);
      const Cached fc(f, m, k + 1, ledger);
      const Cached gc(g, m, k + 1, ledger);
      const double tol = 1e-9 * static_cast<double>(m * (k + 1));
      CHECK(max_abs_diff(product_block(fc.cache, gc.cache, k, ledger), schoolbook_block(f, g, m, k)) <= tol);
    }
  }
}
