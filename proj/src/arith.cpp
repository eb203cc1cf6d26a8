#include "stiefel/arith.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace stiefel {

BigNat::BigNat(Rep v) : value_(std::move(v)) {
  if (value_.sign() < 0)
    throw std::invalid_argument("BigNat: negative value");
}

BigNat BigNat::from_string(std::string_view digits) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw std::invalid_argument("BigNat: not a decimal string: " + std::string(digits));
  return BigNat(Rep(std::string(digits)));
}

Nat BigNat::mod(Nat modulus) const {
  if (modulus == 0)
    throw std::invalid_argument("BigNat::mod: zero modulus");
  return static_cast<Nat>(value_ % modulus);
}

bool BigNat::fits_nat() const {
  return value_ <= std::numeric_limits<Nat>::max();
}

Nat BigNat::to_nat() const {
  if (!fits_nat())
    throw std::overflow_error("BigNat does not fit in 64 bits: " + str());
  return static_cast<Nat>(value_);
}

Nat RHDecomposition::reconstruct() const {
  return (2 * c + 1) << (4 * a + b);
}

bool is_prime(Nat p) {
  if (p < 2)
    return false;
  if (p < 4)
    return true;
  if (p % 2 == 0)
    return false;
  for (Nat d = 3; d <= p / d; d += 2)
    if (p % d == 0)
      return false;
  return true;
}

std::vector<std::pair<Nat, unsigned>> factorize(Nat v) {
  std::vector<std::pair<Nat, unsigned>> out;
  for (Nat d = 2; d <= v / d; ++d) {
    unsigned e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    if (e)
      out.emplace_back(d, e);
  }
  if (v > 1)
    out.emplace_back(v, 1);
  return out;
}

Nat gcd(Nat a, Nat b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

BigNat binomial(Nat n, Nat j) {
  if (j > n)
    return BigNat{};
  j = std::min(j, n - j);
  BigNat::Rep acc = 1;
  // acc == C(n - j + i, i) after step i, so each division is exact.
  for (Nat i = 1; i <= j; ++i) {
    acc *= n - j + i;
    acc /= i;
  }
  return BigNat(std::move(acc));
}

namespace {

void require_prime(Nat p, const char* where) {
  if (!is_prime(p))
    throw std::invalid_argument(std::string(where) + ": " + std::to_string(p) +
                                " is not prime");
}

Nat mul_mod(Nat a, Nat b, Nat q) {
  return static_cast<Nat>(static_cast<unsigned __int128>(a) * b % q);
}

Nat pow_mod(Nat base, Nat e, Nat q) {
  Nat r = 1 % q;
  base %= q;
  while (e) {
    if (e & 1)
      r = mul_mod(r, base, q);
    base = mul_mod(base, base, q);
    e >>= 1;
  }
  return r;
}

// C(a, b) mod p for a < p; the denominator is a unit.
Nat small_binomial_mod(Nat a, Nat b, Nat p) {
  if (b > a)
    return 0;
  b = std::min(b, a - b);
  Nat num = 1, den = 1;
  for (Nat i = 1; i <= b; ++i) {
    num = mul_mod(num, a - b + i, p);
    den = mul_mod(den, i, p);
  }
  return mul_mod(num, pow_mod(den, p - 2, p), p);
}

Nat lucas(Nat n, Nat j, Nat p) {
  Nat r = 1 % p;
  while ((n || j) && r) {
    r = mul_mod(r, small_binomial_mod(n % p, j % p, p), p);
    n /= p;
    j /= p;
  }
  return r;
}

}  // namespace

unsigned padic_valuation_binomial(Nat n, Nat j, Nat p) {
  require_prime(p, "padic_valuation_binomial");
  if (j > n)
    throw std::invalid_argument("padic_valuation_binomial: j > n");
  Nat a = j, b = n - j;
  unsigned carries = 0;
  Nat carry = 0;
  while (a || b || carry) {
    const Nat s = a % p + b % p + carry;
    carry = s >= p ? 1 : 0;
    carries += static_cast<unsigned>(carry);
    a /= p;
    b /= p;
  }
  return carries;
}

Nat binomial_mod(Nat n, Nat j, Nat q) {
  if (q < 2)
    throw std::invalid_argument("binomial_mod: modulus must be >= 2");
  if (j > n)
    return 0;
  if (is_prime(q))
    return lucas(n, j, q);
  return binomial(n, j).mod(q);
}

Nat gcd_with_binomials(Nat m, Nat n, Nat lo, Nat hi) {
  if (m == 0)
    throw std::invalid_argument("gcd_with_binomials: m must be >= 1");
  if (hi > n)
    throw std::invalid_argument("gcd_with_binomials: hi > n");
  if (lo > hi)
    throw std::invalid_argument("gcd_with_binomials: lo > hi");
  Nat g = m;
  // Running C(n, j) so each step is one multiply and one exact divide.
  BigNat::Rep c = binomial(n, lo).value();
  for (Nat j = lo + 1; j <= hi && g != 1; ++j) {
    c *= n - j + 1;
    c /= j;
    g = gcd(g, static_cast<Nat>(c % g));
  }
  return g;
}

RHDecomposition rh_decompose(Nat n) {
  if (n == 0)
    throw std::invalid_argument("radon_hurwitz: n must be >= 1");
  Nat twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  return {twos / 4, twos % 4, (n - 1) / 2};
}

Nat radon_hurwitz(Nat n) {
  const auto d = rh_decompose(n);
  return 8 * d.a + (Nat{1} << d.b);
}

}  // namespace stiefel
