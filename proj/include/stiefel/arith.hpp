#ifndef STIEFEL_ARITH_HPP
#define STIEFEL_ARITH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stiefel {

using Nat = std::uint64_t;

// Exact non-negative integer. Crosses serialization boundaries as a
// decimal string.
class BigNat {
public:
  using Rep = boost::multiprecision::cpp_int;

  BigNat() = default;
  BigNat(Nat v) : value_(v) {}  // NOLINT(implicit)
  explicit BigNat(Rep v);

  static BigNat from_string(std::string_view digits);

  const Rep& value() const { return value_; }
  std::string str() const { return value_.str(); }

  // Residue modulo a machine-word modulus (modulus >= 1).
  Nat mod(Nat modulus) const;
  bool is_zero() const { return value_.is_zero(); }
  bool fits_nat() const;
  Nat to_nat() const;

  friend bool operator==(const BigNat&, const BigNat&) = default;
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    return a.value_.compare(b.value_) <=> 0;
  }

private:
  Rep value_;
};

// n = (2c+1) * 2^(4a+b) with 0 <= b <= 3.
struct RHDecomposition {
  Nat a = 0;
  Nat b = 0;
  Nat c = 0;

  Nat reconstruct() const;
  friend bool operator==(const RHDecomposition&, const RHDecomposition&) = default;
};

bool is_prime(Nat p);

// Prime factorisation by trial division, as (prime, exponent) pairs in
// increasing prime order.
std::vector<std::pair<Nat, unsigned>> factorize(Nat v);

Nat gcd(Nat a, Nat b);

// C(n, j); zero when j > n.
BigNat binomial(Nat n, Nat j);

// v_p(C(n, j)) via Kummer: the number of carries when adding j and n-j
// in base p. Requires j <= n and p prime.
unsigned padic_valuation_binomial(Nat n, Nat j, Nat p);

// C(n, j) mod q. Prime q goes through the base-q digit product (Lucas);
// composite q reduces the exact binomial.
Nat binomial_mod(Nat n, Nat j, Nat q);

// gcd(m, C(n, j) for lo < j <= hi). The empty range (lo == hi) gives m.
Nat gcd_with_binomials(Nat m, Nat n, Nat lo, Nat hi);

RHDecomposition rh_decompose(Nat n);
Nat radon_hurwitz(Nat n);

}  // namespace stiefel

#endif  // STIEFEL_ARITH_HPP
