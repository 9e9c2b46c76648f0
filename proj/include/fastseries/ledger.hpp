#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

namespace fastseries {

// Counts forward and inverse transforms by length. Passed explicitly to every
// operation that transforms; never shared between concurrently running tasks.
class TransformLedger {
 public:
  using Counts = std::map<std::size_t, std::uint64_t>;

  void record_forward(std::size_t n) { ++forward_[n]; }
  void record_inverse(std::size_t n) { ++inverse_[n]; }

  std::uint64_t forward_count(std::size_t n) const;
  std::uint64_t inverse_count(std::size_t n) const;
  std::uint64_t total_forward() const;
  std::uint64_t total_inverse() const;
  std::uint64_t total() const { return total_forward() + total_inverse(); }

  const Counts& forward() const noexcept { return forward_; }
  const Counts& inverse() const noexcept { return inverse_; }

  // Sum over transforms of len * log2(len): a machine-independent proxy for
  // the arithmetic cost of the transforms performed.
  double weighted_cost() const;

  // Counts accumulated since `earlier`, which must be a previous snapshot of
  // this ledger.
  TransformLedger since(const TransformLedger& earlier) const;

  TransformLedger& operator+=(const TransformLedger& other);

  friend bool operator==(const TransformLedger&, const TransformLedger&) = default;

 private:
  Counts forward_;
  Counts inverse_;
};

double transform_weight(std::size_t n);

// Split accounting for the series wrappers: transforms spent producing the
// base case (first block) versus the blockwise iteration itself.
struct CostLedger {
  TransformLedger base;
  TransformLedger block;

  TransformLedger total() const {
    TransformLedger t = base;
    t += block;
    return t;
  }
};

}  // namespace fastseries
