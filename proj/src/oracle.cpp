#include "fastseries/oracle.hpp"

#include <stdexcept>
#include <string>

namespace fastseries::oracle {

namespace {

void require_unit_constant(const Poly& f, const char* what) {
  if (f.empty() || f[0] != Complex{1.0, 0.0}) {
    throw std::invalid_argument(std::string(what) + ": constant term must be 1");
  }
}

bool nonzero_beyond(const Poly& p, std::size_t bound) {
  for (std::size_t i = bound; i < p.size(); ++i) {
    if (p[i] != Complex{}) return true;
  }
  return false;
}

}  // namespace

Poly mul_schoolbook(const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return Poly{};
  Poly out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

Poly sqrt_recurrence(const Poly& f, std::size_t n) {
  require_unit_constant(f, "sqrt_recurrence");
  Poly g(n);
  if (n == 0) return g;
  g[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    Complex acc = f.coeff(k);
    // g_i g_{k-i} for 0 < i < k, paired from both ends.
    for (std::size_t i = 1, j = k - 1; i < j; ++i, --j) acc -= 2.0 * g[i] * g[j];
    if (k % 2 == 0) acc -= g[k / 2] * g[k / 2];
    g[k] = acc / 2.0;
  }
  return g;
}

Poly recip_recurrence(const Poly& f, std::size_t n) {
  require_unit_constant(f, "recip_recurrence");
  Poly g(n);
  if (n == 0) return g;
  g[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    Complex acc{};
    for (std::size_t i = 1; i <= k && i < f.size(); ++i) acc -= f[i] * g[k - i];
    g[k] = acc;
  }
  return g;
}

Poly middle_product_naive(const Poly& g, const Poly& h, std::size_t n) {
  if (nonzero_beyond(g, 2 * n)) throw std::invalid_argument("middle_product_naive: deg g must be < 2n");
  if (nonzero_beyond(h, n)) throw std::invalid_argument("middle_product_naive: deg h must be < n");
  return mul_schoolbook(g, h).slice(n, n);
}

}  // namespace fastseries::oracle
