#include "stiefel/modp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace stiefel {

std::string_view to_string(CohomologyCase c) {
  switch (c) {
  case CohomologyCase::Coprime: return "COPRIME";
  case CohomologyCase::OddDivides: return "ODD_DIVIDES";
  case CohomologyCase::TwoModFour: return "TWO_MOD_FOUR";
  case CohomologyCase::ZeroModFour: return "ZERO_MOD_FOUR";
  }
  return "?";
}

std::string_view to_string(SquareRule r) {
  switch (r) {
  case SquareRule::None: return "NONE";
  case SquareRule::Y1SquaredZero: return "Y1_SQUARED_ZERO";
  case SquareRule::Y1SquaredIsY2: return "Y1_SQUARED_IS_Y2";
  }
  return "?";
}

CohomologyCase cohomology_case_from_string(std::string_view s) {
  for (auto c : {CohomologyCase::Coprime, CohomologyCase::OddDivides,
                 CohomologyCase::TwoModFour, CohomologyCase::ZeroModFour})
    if (to_string(c) == s)
      return c;
  throw std::invalid_argument("unknown cohomology case: " + std::string(s));
}

SquareRule square_rule_from_string(std::string_view s) {
  for (auto r : {SquareRule::None, SquareRule::Y1SquaredZero, SquareRule::Y1SquaredIsY2})
    if (to_string(r) == s)
      return r;
  throw std::invalid_argument("unknown square rule: " + std::string(s));
}

Nat n_prime(Nat n, Nat k, Nat p) {
  if (k < 1 || k >= n)
    throw std::invalid_argument("n_prime: need 1 <= k < n");
  if (!is_prime(p))
    throw std::invalid_argument("n_prime: " + std::to_string(p) + " is not prime");
  for (Nat j = n - k + 1; j < n; ++j)
    if (binomial_mod(n, j, p) != 0)
      return j;
  return n;
}

CohomologyCase classify(Nat m, Nat p) {
  if (m % p != 0)
    return CohomologyCase::Coprime;
  if (p != 2)
    return CohomologyCase::OddDivides;
  return m % 4 == 2 ? CohomologyCase::TwoModFour : CohomologyCase::ZeroModFour;
}

RingPresentation presentation(const ManifoldParams& params, Nat p) {
  if (!is_prime(p))
    throw std::invalid_argument("presentation: " + std::to_string(p) + " is not prime");
  const Nat n = params.n(), k = params.k();
  RingPresentation pres;
  pres.p = p;
  pres.cohomology_case = classify(params.m(), p);

  // Degrees of the Stiefel generators: 2n-2k+1, 2n-2k+3, ..., 2n-1.
  std::vector<Nat> odd_run;
  for (Nat d = 2 * n - 2 * k + 1; d <= 2 * n - 1; d += 2)
    odd_run.push_back(d);

  if (pres.cohomology_case == CohomologyCase::Coprime) {
    pres.exterior_degrees = std::move(odd_run);
    return pres;
  }

  const Nat np = n_prime(n, k, p);
  const Nat omitted = 2 * np - 1;
  pres.n_prime = np;
  std::erase(odd_run, omitted);

  if (pres.cohomology_case == CohomologyCase::TwoModFour) {
    pres.poly_generator = PolyGenerator{1, 2 * np};
    pres.square_rule = SquareRule::Y1SquaredIsY2;
    pres.exterior_degrees = std::move(odd_run);
  } else {
    pres.poly_generator = PolyGenerator{2, np};
    pres.square_rule = SquareRule::Y1SquaredZero;
    pres.exterior_degrees.push_back(1);
    pres.exterior_degrees.insert(pres.exterior_degrees.end(), odd_run.begin(), odd_run.end());
  }
  return pres;
}

std::string render(const RingPresentation& pres) {
  const char var = pres.cohomology_case == CohomologyCase::Coprime ? 'v' : 'y';
  std::vector<std::string> factors;
  if (pres.poly_generator) {
    const std::string g = "y" + std::to_string(pres.poly_generator->degree);
    factors.push_back("Z_" + std::to_string(pres.p) + "[" + g + "]/(" + g + "^" +
                      std::to_string(pres.poly_generator->truncation) + ")");
  }
  if (!pres.exterior_degrees.empty()) {
    std::string lam = "Lambda(";
    for (std::size_t i = 0; i < pres.exterior_degrees.size(); ++i) {
      if (i)
        lam += ", ";
      lam += var + std::to_string(pres.exterior_degrees[i]);
    }
    factors.push_back(lam + ")");
  }
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i)
      out += " (x) ";
    out += factors[i];
  }
  if (out.empty())
    out = "Z_" + std::to_string(pres.p);
  if (pres.square_rule == SquareRule::Y1SquaredZero)
    out += "; y1^2 = 0";
  return out;
}

Nat total_dimension(const RingPresentation& pres, Nat k) {
  const auto shifted = [](Nat base, Nat shift) {
    if (shift >= 64 || base > (std::numeric_limits<Nat>::max() >> shift))
      throw std::overflow_error("total_dimension exceeds 64 bits");
    return base << shift;
  };
  if (pres.cohomology_case == CohomologyCase::Coprime)
    return shifted(1, k);
  if (!pres.n_prime)
    throw std::invalid_argument("total_dimension: presentation lacks N'");
  return shifted(2 * *pres.n_prime, k - 1);
}

std::vector<Nat> poincare_polynomial(const RingPresentation& pres, Nat n, Nat k) {
  const Nat top = k * (2 * n - k);
  // Every coefficient is bounded by the total dimension; this throws first
  // if that would overflow.
  (void)total_dimension(pres, k);

  std::vector<Nat> coeffs(top + 1, 0);
  coeffs[0] = 1;
  Nat deg = 0;  // current polynomial degree
  if (pres.poly_generator) {
    const auto [g, t] = *pres.poly_generator;
    for (Nat i = 1; i < t; ++i)
      coeffs.at(g * i) = 1;
    deg = g * (t - 1);
  }
  for (Nat d : pres.exterior_degrees) {
    // multiply by (1 + t^d), highest degree first
    if (deg + d > top)
      throw std::runtime_error("presentation exceeds manifold dimension");
    for (Nat i = deg + 1; i-- > 0;)
      coeffs[i + d] += coeffs[i];
    deg += d;
  }
  return coeffs;
}

Nat betti_mod_p(const ManifoldParams& params, Nat p, Nat q) {
  const Nat top = params.dimension();
  if (q > top)
    return 0;
  const auto pres = presentation(params, p);
  return poincare_polynomial(pres, params.n(), params.k())[q];
}

}  // namespace stiefel
