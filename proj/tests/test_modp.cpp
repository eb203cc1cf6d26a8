#include "doctest.h"
#include "oracle.hpp"
#include "stiefel/modp.hpp"

#include <numeric>
#include <stdexcept>

using namespace stiefel;
using V = std::vector<Nat>;

namespace {

std::vector<Nat> support(const std::vector<Nat>& coeffs) {
  std::vector<Nat> out;
  for (Nat q = 0; q < coeffs.size(); ++q)
    if (coeffs[q])
      out.push_back(q);
  return out;
}

// Least j in (n-k, n] with p not dividing C(n, j), from Pascal's triangle.
Nat oracle_n_prime(Nat n, Nat k, Nat p) {
  for (Nat j = n - k + 1; j <= n; ++j)
    if (oracle::residue(oracle::pascal()(n, j), p) != 0)
      return j;
  return 0;
}

}  // namespace

TEST_CASE("n_prime examples") {
  CHECK(n_prime(4, 2, 2) == 4);
  CHECK(n_prime(3, 2, 2) == 2);
  CHECK(n_prime(3, 2, 3) == 3);
  CHECK_THROWS_AS(n_prime(3, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(n_prime(3, 3, 2), std::invalid_argument);
}

TEST_CASE("n_prime against Pascal") {
  for (Nat n = 2; n <= 60; ++n)
    for (Nat k = 1; k < n; ++k)
      for (Nat p : {2, 3, 5, 7, 11})
        REQUIRE(n_prime(n, k, p) == oracle_n_prime(n, k, p));
}

TEST_CASE("presentation examples") {
  auto pr = presentation(validate(3, 2, 2), 2);
  CHECK(pr.cohomology_case == CohomologyCase::TwoModFour);
  REQUIRE(pr.poly_generator);
  CHECK(*pr.poly_generator == PolyGenerator{1, 4});
  CHECK(pr.exterior_degrees == V{5});
  CHECK(pr.square_rule == SquareRule::Y1SquaredIsY2);
  CHECK(pr.n_prime == Nat{2});
  CHECK(render(pr) == "Z_2[y1]/(y1^4) (x) Lambda(y5)");

  pr = presentation(validate(3, 2, 5), 2);
  CHECK(pr.cohomology_case == CohomologyCase::Coprime);
  CHECK_FALSE(pr.poly_generator);
  CHECK(pr.exterior_degrees == V{3, 5});
  CHECK(pr.square_rule == SquareRule::None);
  CHECK_FALSE(pr.n_prime);
  CHECK(render(pr) == "Lambda(v3, v5)");

  pr = presentation(validate(3, 2, 4), 2);
  CHECK(pr.cohomology_case == CohomologyCase::ZeroModFour);
  CHECK(*pr.poly_generator == PolyGenerator{2, 2});
  CHECK(pr.exterior_degrees == V{1, 5});
  CHECK(pr.square_rule == SquareRule::Y1SquaredZero);
  CHECK(render(pr) == "Z_2[y2]/(y2^2) (x) Lambda(y1, y5); y1^2 = 0");

  pr = presentation(validate(3, 2, 3), 3);
  CHECK(pr.cohomology_case == CohomologyCase::OddDivides);
  CHECK(*pr.poly_generator == PolyGenerator{2, 3});
  CHECK(pr.exterior_degrees == V{1, 3});
  CHECK(render(pr) == "Z_3[y2]/(y2^3) (x) Lambda(y1, y3); y1^2 = 0");

  CHECK_THROWS_AS(presentation(validate(3, 2, 4), 4), std::invalid_argument);
}

TEST_CASE("lens space specialization") {
  // k = 1, p | m: N' = n and only y1 survives the Lambda factor.
  auto pr = presentation(validate(5, 1, 6), 3);
  CHECK(pr.n_prime == Nat{5});
  CHECK(*pr.poly_generator == PolyGenerator{2, 5});
  CHECK(pr.exterior_degrees == V{1});

  pr = presentation(validate(4, 1, 2), 2);
  CHECK(*pr.poly_generator == PolyGenerator{1, 8});
  CHECK(pr.exterior_degrees.empty());
  CHECK(render(pr) == "Z_2[y1]/(y1^8)");
  // RP^7: one class in every degree
  CHECK(poincare_polynomial(pr, 4, 1) == V(8, 1));
}

TEST_CASE("poincare polynomial examples") {
  const auto pr = presentation(validate(3, 2, 2), 2);
  const auto pp = poincare_polynomial(pr, 3, 2);
  CHECK(pp.size() == 9);
  CHECK(support(pp) == V{0, 1, 2, 3, 5, 6, 7, 8});
  CHECK(std::all_of(pp.begin(), pp.end(), [](Nat c) { return c <= 1; }));

  const auto cp = poincare_polynomial(presentation(validate(3, 2, 5), 2), 3, 2);
  CHECK(support(cp) == V{0, 3, 5, 8});
}

TEST_CASE("betti numbers") {
  const auto p = validate(3, 2, 2);
  CHECK(betti_mod_p(p, 2, 4) == 0);
  CHECK(betti_mod_p(p, 2, 8) == 1);
  CHECK(betti_mod_p(p, 2, 0) == 1);
  CHECK(betti_mod_p(p, 2, 9) == 0);
  CHECK(betti_mod_p(p, 2, 1000) == 0);
  for (Nat m = 2; m <= 12; ++m)
    for (Nat pr : {2, 3, 5})
      CHECK(betti_mod_p(validate(7, 3, m), pr, 0) == 1);
}

TEST_CASE("total dimension") {
  CHECK(total_dimension(presentation(validate(3, 2, 2), 2), 2) == 8);
  CHECK(total_dimension(presentation(validate(3, 2, 5), 2), 2) == 4);
  CHECK(total_dimension(presentation(validate(4, 2, 2), 2), 2) == 16);
}

TEST_CASE("presentation invariants and basis enumeration") {
  for (Nat n = 2; n <= 14; ++n)
    for (Nat k = 1; k < n; ++k)
      for (Nat m : {2, 3, 4, 5, 6, 8, 9, 12})
        for (Nat p : {2, 3, 5, 7}) {
          const auto params = validate(n, k, m);
          const auto pr = presentation(params, p);
          const Nat d = params.dimension();
          REQUIRE(std::is_sorted(pr.exterior_degrees.begin(), pr.exterior_degrees.end()));

          V odd_run;
          for (Nat q = 2 * n - 2 * k + 1; q <= 2 * n - 1; q += 2)
            odd_run.push_back(q);

          switch (pr.cohomology_case) {
          case CohomologyCase::Coprime:
            REQUIRE(m % p != 0);
            REQUIRE(pr.exterior_degrees == odd_run);
            break;
          case CohomologyCase::OddDivides:
            REQUIRE((p != 2 && m % p == 0));
            break;
          case CohomologyCase::TwoModFour:
            REQUIRE((p == 2 && m % 4 == 2));
            break;
          case CohomologyCase::ZeroModFour:
            REQUIRE((p == 2 && m % 4 == 0));
            break;
          }
          if (pr.n_prime) {
            const Nat omitted = 2 * *pr.n_prime - 1;
            REQUIRE(omitted >= 2 * n - 2 * k + 1);
            REQUIRE(omitted <= 2 * n - 1);
            REQUIRE(std::find(pr.exterior_degrees.begin(), pr.exterior_degrees.end(), omitted) ==
                    pr.exterior_degrees.end());
          }

          const auto pp = poincare_polynomial(pr, n, k);
          REQUIRE(pp.size() == d + 1);
          const auto g = pr.poly_generator.value_or(PolyGenerator{0, 1});
          REQUIRE(pp == oracle::basis_histogram(g.degree, g.truncation, pr.exterior_degrees, d));
          REQUIRE(std::accumulate(pp.begin(), pp.end(), Nat{0}) == total_dimension(pr, k));
        }
}
