#ifndef STIEFEL_MODP_HPP
#define STIEFEL_MODP_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stiefel/arith.hpp"
#include "stiefel/manifold.hpp"

namespace stiefel {

// Which description of H^*(W_{n,k;m}; Z_p) applies.
enum class CohomologyCase {
  Coprime,      // p does not divide m
  OddDivides,   // p odd, p | m
  TwoModFour,   // p = 2, m = 2 mod 4
  ZeroModFour,  // p = 2, m = 0 mod 4
};

enum class SquareRule {
  None,
  Y1SquaredZero,  // y1^2 = 0
  Y1SquaredIsY2,  // y2 := y1^2, no separate y2 generator
};

std::string_view to_string(CohomologyCase c);
std::string_view to_string(SquareRule r);
CohomologyCase cohomology_case_from_string(std::string_view s);
SquareRule square_rule_from_string(std::string_view s);

struct PolyGenerator {
  Nat degree = 0;
  Nat truncation = 0;  // generator^truncation = 0
  friend bool operator==(const PolyGenerator&, const PolyGenerator&) = default;
};

// Additive presentation: a truncated polynomial algebra (when present)
// tensored with a Lambda algebra on the listed degrees, meaning only that
// square-free monomials form a basis.
struct RingPresentation {
  Nat p = 0;
  CohomologyCase cohomology_case = CohomologyCase::Coprime;
  std::optional<PolyGenerator> poly_generator;
  std::vector<Nat> exterior_degrees;  // sorted ascending
  SquareRule square_rule = SquareRule::None;
  std::optional<Nat> n_prime;

  friend bool operator==(const RingPresentation&, const RingPresentation&) = default;
};

// Least j in [n-k+1, n] with C(n, j) != 0 mod p. Exists since C(n, n) = 1.
Nat n_prime(Nat n, Nat k, Nat p);

CohomologyCase classify(Nat m, Nat p);

// Requires p prime.
RingPresentation presentation(const ManifoldParams& params, Nat p);

// Canonical text, generators ordered by degree:
//   COPRIME       Lambda(v5, v7)
//   ODD_DIVIDES   Z_3[y2]/(y2^4) (x) Lambda(y1, y7)
//   TWO_MOD_FOUR  Z_2[y1]/(y1^8) (x) Lambda(y5)
//   ZERO_MOD_FOUR Z_2[y2]/(y2^4) (x) Lambda(y1, y5); y1^2 = 0
// An empty Lambda factor is dropped; if nothing remains the text is "Z_p".
std::string render(const RingPresentation& pres);

// Mod-p Poincare polynomial; index = degree, length k(2n-k) + 1.
std::vector<Nat> poincare_polynomial(const RingPresentation& pres, Nat n, Nat k);

Nat betti_mod_p(const ManifoldParams& params, Nat p, Nat q);

// 2^k for COPRIME, 2 N' 2^{k-1} otherwise.
Nat total_dimension(const RingPresentation& pres, Nat k);

}  // namespace stiefel

#endif  // STIEFEL_MODP_HPP
