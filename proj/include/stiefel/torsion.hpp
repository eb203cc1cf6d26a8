#ifndef STIEFEL_TORSION_HPP
#define STIEFEL_TORSION_HPP

#include <vector>

#include "stiefel/arith.hpp"
#include "stiefel/manifold.hpp"

namespace stiefel {

// Additive orders of the powers of the degree-2 integral generator y2.
//
// orders[r - 1] is the order m_r of y2^r in H^{2r}(W_{n,k;m}; Z) for
// 1 <= r <= n:
//   m_r = m                                     for r <= n - k
//   m_r = gcd(m, C(n, j) : n - k < j <= r)      for n - k < r <= n
// An order of 1 means y2^r = 0. The chain m_{r+1} | m_r holds and m_n = 1.
struct TorsionProfile {
  std::vector<Nat> orders;
  // max{ r : m_r > 1 }; always in [n - k, n - 1].
  Nat height = 0;

  Nat order(Nat r) const { return orders.at(r - 1); }
  friend bool operator==(const TorsionProfile&, const TorsionProfile&) = default;
};

// m_r via p-adic valuations over the prime factors of m.
Nat m_r(const ManifoldParams& params, Nat r);

// Whole profile by the incremental gcd m_{r+1} = gcd(m_r, C(n, r+1)).
TorsionProfile torsion_profile(const ManifoldParams& params);

Nat order_of_power(const ManifoldParams& params, Nat r);

// Coefficient C(n, k - j) of y2^{n-k+j} in the transgression of the
// fibre generator of degree 2n - 2k + 2j - 1, for 1 <= j <= k.
BigNat transgression_coefficient(const ManifoldParams& params, Nat j);

}  // namespace stiefel

#endif  // STIEFEL_TORSION_HPP
