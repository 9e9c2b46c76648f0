#include "fastseries/app/random.hpp"

namespace fastseries::app {
namespace {

__extension__ using u128 = unsigned __int128;

constexpr u128 kMultiplier = (static_cast<u128>(0x2360ed051fc65da4ULL) << 64) | 0x4385df649fccf645ULL;

}  // namespace

Pcg64::Pcg64(std::uint64_t seed, std::uint64_t stream) {
  inc_ = (static_cast<u128>(stream) << 1) | 1u;
  step();
  state_ += seed;
  step();
}

void Pcg64::step() { state_ = state_ * kMultiplier + inc_; }

Pcg64::result_type Pcg64::operator()() {
  step();
  const auto hi = static_cast<std::uint64_t>(state_ >> 64);
  const auto lo = static_cast<std::uint64_t>(state_);
  const unsigned rot = static_cast<unsigned>(hi >> 58);
  const std::uint64_t x = hi ^ lo;
  return (x >> rot) | (x << ((64 - rot) & 63));
}

double Pcg64::uniform(double lo, double hi) {
  const double u = static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Poly random_unit_series(std::uint64_t seed, std::size_t n) {
  Pcg64 rng(seed);
  Poly f(n);
  if (n) f[0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) f[i] = rng.uniform(-0.25, 0.25);
  return f;
}

Poly random_tapered_series(std::uint64_t seed, std::size_t n) {
  Poly f = random_unit_series(seed, n);
  for (std::size_t i = 1; i < n; ++i) f[i] /= static_cast<double>(i) * static_cast<double>(i);
  return f;
}

Poly random_monic(std::uint64_t seed, std::size_t degree) {
  Pcg64 rng(seed);
  Poly f(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) f[i] = rng.uniform(-0.25, 0.25);
  f[degree] = 1.0;
  return f;
}

}  // namespace fastseries::app
