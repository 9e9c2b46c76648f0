#include "fastseries/blockwise.hpp"

#include <stdexcept>
#include <string>

#include "fastseries/transform.hpp"

namespace fastseries {

BlockSeries::BlockSeries(std::size_t block_size) : m_(block_size) {
  if (block_size == 0) throw std::invalid_argument("BlockSeries: block size must be positive");
}

BlockSeries BlockSeries::decompose(const Poly& f, std::size_t block_size, std::size_t num_blocks) {
  BlockSeries series(block_size);
  series.blocks_.reserve(num_blocks);
  for (std::size_t i = 0; i < num_blocks; ++i) series.blocks_.push_back(f.slice(i * block_size, block_size));
  return series;
}

const Poly& BlockSeries::block(std::size_t i) const {
  if (i >= blocks_.size()) {
    throw std::out_of_range("BlockSeries: block " + std::to_string(i) + " out of range");
  }
  return blocks_[i];
}

void BlockSeries::append(Poly block) {
  if (block.size() > m_) throw std::invalid_argument("BlockSeries::append: block longer than m");
  block.resize(m_);
  blocks_.push_back(std::move(block));
}

Poly BlockSeries::recompose() const {
  Poly out(m_ * blocks_.size());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = 0; j < m_; ++j) out[i * m_ + j] = blocks_[i][j];
  }
  return out;
}

TransformCache::TransformCache(std::size_t block_size) : m_(block_size) {
  if (block_size == 0) throw std::invalid_argument("TransformCache: block size must be positive");
}

const Spectrum& TransformCache::at(std::size_t i) const {
  if (!has(i)) {
    throw std::out_of_range("TransformCache: no spectrum for block " + std::to_string(i));
  }
  return *spectra_[i];
}

void TransformCache::store(std::size_t i, Spectrum spectrum) {
  if (spectrum.length() != 2 * m_) throw std::invalid_argument("TransformCache::store: wrong spectrum length");
  if (has(i)) throw std::logic_error("TransformCache::store: entry " + std::to_string(i) + " already set");
  if (spectra_.size() <= i) spectra_.resize(i + 1);
  spectra_[i] = std::move(spectrum);
}

const Spectrum& ensure_transform(TransformCache& cache, const BlockSeries& series, std::size_t i,
                                 TransformLedger& ledger) {
  if (cache.block_size() != series.block_size()) {
    throw std::invalid_argument("ensure_transform: cache and series block sizes differ");
  }
  if (!cache.has(i)) cache.store(i, forward(series.block(i), cache.transform_length(), ledger));
  return cache.at(i);
}

Poly product_block(const TransformCache& f, const TransformCache& g, std::size_t k,
                   TransformLedger& ledger, std::size_t f_blocks, std::size_t g_blocks) {
  const BlockTerm term{&f, &g, 1, 0, f_blocks, g_blocks};
  return combined_block(std::span(&term, 1), k, ledger);
}

Poly combined_block(std::span<const BlockTerm> terms, std::size_t k, TransformLedger& ledger) {
  if (terms.empty()) throw std::invalid_argument("combined_block: no terms");
  const std::size_t m = terms.front().f->block_size();
  const std::size_t len = 2 * m;
  Spectrum acc(len);

  for (const BlockTerm& term : terms) {
    if (term.f->block_size() != m || term.g->block_size() != m) {
      throw std::invalid_argument("combined_block: terms use different block sizes");
    }
    const std::ptrdiff_t target = static_cast<std::ptrdiff_t>(k) + term.shift;
    if (target < 0) throw std::invalid_argument("combined_block: shifted block index is negative");
    const auto kk = static_cast<std::size_t>(target);
    const double sign = term.sign < 0 ? -1.0 : 1.0;

    for (std::size_t i = 0; i <= kk && i < term.g_blocks; ++i) {
      const std::size_t hi = kk - i;
      const bool use_hi = hi < term.f_blocks;
      const bool use_lo = hi >= 1 && hi - 1 < term.f_blocks;
      if (!use_hi && !use_lo) continue;
      const Spectrum& gs = term.g->at(i);
      const Spectrum* fhi = use_hi ? &term.f->at(hi) : nullptr;
      const Spectrum* flo = use_lo ? &term.f->at(hi - 1) : nullptr;
      // F_2m(X)_j = (-1)^j, so f_[k-i] X contributes with alternating sign.
      for (std::size_t j = 0; j < len; ++j) {
        Complex a{};
        if (flo) a += (*flo)[j];
        if (fhi) a += (j % 2 == 0) ? (*fhi)[j] : -(*fhi)[j];
        acc[j] += sign * (a * gs[j]);
      }
    }
  }
  return inverse(acc, ledger).slice(m, m);
}

}  // namespace fastseries
