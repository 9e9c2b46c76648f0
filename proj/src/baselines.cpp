#include "fastseries/baselines.hpp"

#include <algorithm>

#include "checks.hpp"
#include "fastseries/transform.hpp"

namespace fastseries {

std::vector<std::size_t> newton_ladder(std::size_t n) {
  std::vector<std::size_t> ladder;
  for (std::size_t k = n; k > 1; k = (k + 1) / 2) ladder.push_back(k);
  ladder.push_back(1);
  std::reverse(ladder.begin(), ladder.end());
  return ladder;
}

Poly recip_schonhage(const Poly& f, std::size_t n, TransformLedger& ledger) {
  detail::require_unit_constant(f, "recip_schonhage");
  detail::require_positive_precision(n, "recip_schonhage");

  Poly g{Complex{1.0, 0.0}};
  const std::vector<std::size_t> ladder = newton_ladder(n);
  for (std::size_t step = 1; step < ladder.size(); ++step) {
    const std::size_t k = ladder[step - 1];
    const std::size_t t = ladder[step];
    const std::size_t len = next_supported(k + t);
    const Spectrum gs = forward(g, len, ledger);
    const Spectrum fs = forward(f.truncated(t), len, ledger);
    const Poly prod = inverse(pointwise_mul(pointwise_mul(gs, gs), fs), ledger);
    g.resize(t);
    for (std::size_t i = k; i < t; ++i) g[i] = -prod[i];
  }
  return g;
}

SqrtPair sqrt_newton_coupled(const Poly& f, std::size_t n, TransformLedger& ledger) {
  detail::require_unit_constant(f, "sqrt_newton_coupled");
  detail::require_positive_precision(n, "sqrt_newton_coupled");

  Poly g{Complex{1.0, 0.0}};
  Poly ginv{Complex{1.0, 0.0}};
  const std::vector<std::size_t> ladder = newton_ladder(n);
  for (std::size_t step = 1; step < ladder.size(); ++step) {
    const std::size_t k = ladder[step - 1];
    const std::size_t t = ladder[step];
    const std::size_t d = t - k;

    // g += x^k * ((f - g^2) / x^k) * ginv / 2, everything mod x^t.
    const Poly square = multiply(g, g, ledger);
    Poly residue(d);
    for (std::size_t i = 0; i < d; ++i) residue[i] = f.coeff(k + i) - square.coeff(k + i);
    const Poly root_fix = multiply(residue, ginv.truncated(d), ledger);
    g.resize(t);
    for (std::size_t i = 0; i < d; ++i) g[k + i] = 0.5 * root_fix[i];

    // ginv -= x^k * ginv * ((g * ginv - 1) / x^k), mod x^t.
    const Poly unit = multiply(g, ginv, ledger);
    Poly error(d);
    for (std::size_t i = 0; i < d; ++i) error[i] = unit.coeff(k + i);
    const Poly inv_fix = multiply(ginv.truncated(d), error, ledger);
    ginv.resize(t);
    for (std::size_t i = 0; i < d; ++i) ginv[k + i] = -inv_fix[i];
  }
  return {std::move(g), std::move(ginv)};
}

}  // namespace fastseries
