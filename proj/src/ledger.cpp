#include "fastseries/ledger.hpp"

#include <cmath>
#include <stdexcept>

namespace fastseries {

namespace {

std::uint64_t lookup(const TransformLedger::Counts& counts, std::size_t n) {
  const auto it = counts.find(n);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t sum(const TransformLedger::Counts& counts) {
  std::uint64_t total = 0;
  for (const auto& [len, count] : counts) total += count;
  return total;
}

TransformLedger::Counts difference(const TransformLedger::Counts& now,
                                   const TransformLedger::Counts& before) {
  TransformLedger::Counts out;
  for (const auto& [len, count] : now) {
    const std::uint64_t prev = lookup(before, len);
    if (prev > count) throw std::logic_error("ledger snapshot is not an earlier state");
    if (count > prev) out[len] = count - prev;
  }
  return out;
}

}  // namespace

double transform_weight(std::size_t n) {
  return n <= 1 ? 0.0 : static_cast<double>(n) * std::log2(static_cast<double>(n));
}

std::uint64_t TransformLedger::forward_count(std::size_t n) const { return lookup(forward_, n); }
std::uint64_t TransformLedger::inverse_count(std::size_t n) const { return lookup(inverse_, n); }
std::uint64_t TransformLedger::total_forward() const { return sum(forward_); }
std::uint64_t TransformLedger::total_inverse() const { return sum(inverse_); }

double TransformLedger::weighted_cost() const {
  double cost = 0.0;
  for (const auto& [len, count] : forward_) cost += static_cast<double>(count) * transform_weight(len);
  for (const auto& [len, count] : inverse_) cost += static_cast<double>(count) * transform_weight(len);
  return cost;
}

TransformLedger TransformLedger::since(const TransformLedger& earlier) const {
  TransformLedger delta;
  delta.forward_ = difference(forward_, earlier.forward_);
  delta.inverse_ = difference(inverse_, earlier.inverse_);
  return delta;
}

TransformLedger& TransformLedger::operator+=(const TransformLedger& other) {
  for (const auto& [len, count] : other.forward_) forward_[len] += count;
  for (const auto& [len, count] : other.inverse_) inverse_[len] += count;
  return *this;
}

}  // namespace fastseries
