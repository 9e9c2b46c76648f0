#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "fastseries/ledger.hpp"
#include "fastseries/poly.hpp"

namespace fastseries {

// A series split into blocks of m coefficients: f = f_[0] + f_[1] X + ...,
// X = x^m. Every stored block has length exactly m.
class BlockSeries {
 public:
  explicit BlockSeries(std::size_t block_size);

  // Blocks 0..num_blocks-1 of f. Coefficients past num_blocks*m are dropped;
  // missing ones are zero.
  static BlockSeries decompose(const Poly& f, std::size_t block_size, std::size_t num_blocks);

  std::size_t block_size() const noexcept { return m_; }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  const Poly& block(std::size_t i) const;

  // Appends a block, zero-padding it to length m; longer input is rejected.
  void append(Poly block);

  Poly recompose() const;

 private:
  std::size_t m_;
  std::vector<Poly> blocks_;
};

// Write-once store of F_2m(f_[i]) for the blocks of one series.
class TransformCache {
 public:
  explicit TransformCache(std::size_t block_size);

  std::size_t block_size() const noexcept { return m_; }
  std::size_t transform_length() const noexcept { return 2 * m_; }

  bool has(std::size_t i) const noexcept { return i < spectra_.size() && spectra_[i].has_value(); }
  const Spectrum& at(std::size_t i) const;  // throws std::out_of_range if absent
  void store(std::size_t i, Spectrum spectrum);

 private:
  std::size_t m_;
  std::vector<std::optional<Spectrum>> spectra_;
};

// F_2m of block i, computing and caching it on first use.
const Spectrum& ensure_transform(TransformCache& cache, const BlockSeries& series, std::size_t i,
                                 TransformLedger& ledger);

inline constexpr std::size_t kAllBlocks = std::numeric_limits<std::size_t>::max();

// One signed product sign * (f * g) inside combined_block. `shift` offsets the
// block index for this term, and f_blocks / g_blocks treat every block at or
// past that count as zero (for series whose later blocks are not known yet).
struct BlockTerm {
  const TransformCache* f = nullptr;
  const TransformCache* g = nullptr;
  int sign = 1;
  std::ptrdiff_t shift = 0;
  std::size_t f_blocks = kAllBlocks;
  std::size_t g_blocks = kAllBlocks;
};

// Block k of f*g from cached block spectra, using
//   (fg)_[k] = sum_{i<=k} (f_[k-i-1] + f_[k-i] X) ⋊_m g_[i],  f_[-1] = 0,
// evaluated in the frequency domain with one inverse transform of length 2m.
Poly product_block(const TransformCache& f, const TransformCache& g, std::size_t k,
                   TransformLedger& ledger, std::size_t f_blocks = kAllBlocks,
                   std::size_t g_blocks = kAllBlocks);

// Block k of sum_t sign_t * (f_t * g_t), still with a single inverse transform.
Poly combined_block(std::span<const BlockTerm> terms, std::size_t k, TransformLedger& ledger);

}  // namespace fastseries
