#include "stiefel/torsion.hpp"

#include <algorithm>
#include <stdexcept>

namespace stiefel {

namespace {

void require_power_index(const ManifoldParams& params, Nat r) {
  if (r < 1 || r > params.n())
    throw std::out_of_range("power index r=" + std::to_string(r) +
                            " outside [1, " + std::to_string(params.n()) + "]");
}

Nat ipow(Nat base, unsigned e) {
  Nat r = 1;
  while (e--)
    r *= base;
  return r;
}

}  // namespace

Nat m_r(const ManifoldParams& params, Nat r) {
  require_power_index(params, r);
  const Nat n = params.n(), m = params.m();
  const Nat free_top = n - params.k();
  if (r <= free_top)
    return m;
  Nat result = 1;
  for (const auto& [p, e] : factorize(m)) {
    unsigned v = e;
    for (Nat j = free_top + 1; j <= r && v > 0; ++j)
      v = std::min(v, padic_valuation_binomial(n, j, p));
    result *= ipow(p, v);
  }
  return result;
}

TorsionProfile torsion_profile(const ManifoldParams& params) {
  const Nat n = params.n(), m = params.m();
  const Nat free_top = n - params.k();
  TorsionProfile out;
  out.orders.assign(n, m);
  BigNat::Rep c = binomial(n, free_top).value();
  Nat g = m;
  for (Nat r = free_top + 1; r <= n; ++r) {
    c *= n - r + 1;
    c /= r;
    if (g > 1)
      g = gcd(g, static_cast<Nat>(c % g));
    out.orders[r - 1] = g;
  }
  out.height = free_top;
  for (Nat r = n; r > free_top; --r) {
    if (out.orders[r - 1] > 1) {
      out.height = r;
      break;
    }
  }
  return out;
}

Nat order_of_power(const ManifoldParams& params, Nat r) {
  require_power_index(params, r);
  return torsion_profile(params).order(r);
}

BigNat transgression_coefficient(const ManifoldParams& params, Nat j) {
  if (j < 1 || j > params.k())
    throw std::out_of_range("transgression index j=" + std::to_string(j) +
                            " outside [1, " + std::to_string(params.k()) + "]");
  return binomial(params.n(), params.k() - j);
}

}  // namespace stiefel
