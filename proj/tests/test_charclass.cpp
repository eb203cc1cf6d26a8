#include "doctest.h"
#include "oracle.hpp"
#include "stiefel/charclass.hpp"
#include "stiefel/modp.hpp"

using namespace stiefel;

TEST_CASE("Pontrjagin class examples") {
  auto t = pontrjagin_class(validate(4, 2, 3), 1);
  CHECK(t.raw_coefficient == BigNat(8));
  CHECK(t.modulus == 3);
  CHECK(t.reduced == 2);
  CHECK_FALSE(t.is_zero);

  t = pontrjagin_class(validate(4, 2, 2), 1);
  CHECK(t.raw_coefficient == BigNat(8));
  CHECK(t.modulus == 2);
  CHECK(t.reduced == 0);
  CHECK(t.is_zero);

  for (Nat m = 2; m <= 9; ++m) {
    t = pontrjagin_class(validate(5, 2, m), 3);  // 2j = 6 > n
    CHECK(t.modulus == 1);
    CHECK(t.is_zero);
  }
  CHECK_THROWS(pontrjagin_class(validate(4, 2, 2), 0));
}

TEST_CASE("Stiefel-Whitney examples") {
  CHECK(stiefel_whitney_classes(validate(4, 2, 3)).empty());
  CHECK(stiefel_whitney_classes(validate(4, 2, 4)).empty());

  const auto w = stiefel_whitney_classes(validate(5, 2, 2));
  // N = 8: degrees 2, 4, 6 are candidates; C(10,1)=10, C(10,2)=45, C(10,3)=120.
  REQUIRE(w.size() == 3);
  CHECK(w[0] == StiefelWhitneyTerm{2, false});
  CHECK(w[1] == StiefelWhitneyTerm{4, true});
  CHECK(w[2] == StiefelWhitneyTerm{6, false});

  for (const auto& term : stiefel_whitney_classes(validate(4, 2, 2)))
    CHECK_FALSE(term.present);
}

TEST_CASE("char class report examples") {
  auto r = char_class_report(validate(4, 2, 2));
  CHECK(r.pontrjagin.size() == 2);
  CHECK(r.all_pontrjagin_vanish);
  CHECK(r.all_sw_vanish);

  r = char_class_report(validate(4, 2, 3));
  CHECK_FALSE(r.all_pontrjagin_vanish);
  CHECK(r.all_sw_vanish);

  r = char_class_report(validate(9, 3, 3));
  CHECK(r.pontrjagin.size() == 4);
  CHECK(r.all_pontrjagin_vanish);
  CHECK(r.all_sw_vanish);
}

TEST_CASE("prime-power family has vanishing classes") {
  for (auto [n, k, m] : {std::tuple<Nat, Nat, Nat>{4, 2, 2}, {8, 2, 2}, {8, 4, 2}, {9, 3, 3}}) {
    const auto params = validate(n, k, m);
    for (Nat j = 1; j <= n * k; ++j)
      REQUIRE(pontrjagin_class(params, j).is_zero);
    for (const auto& w : stiefel_whitney_classes(params))
      REQUIRE_FALSE(w.present);
    const auto r = char_class_report(params);
    CHECK(r.all_pontrjagin_vanish);
    CHECK(r.all_sw_vanish);
  }
}

TEST_CASE("char class properties") {
  const auto& P = oracle::pascal();
  for (Nat n = 2; n <= 20; ++n)
    for (Nat k = 1; k < n; ++k)
      for (Nat m = 2; m <= 20; ++m) {
        const auto params = validate(n, k, m);
        const auto r = char_class_report(params);
        REQUIRE(r.pontrjagin.size() == n / 2);
        for (const auto& t : r.pontrjagin) {
          const Nat order = oracle::m_r(n, k, m, 2 * t.j);
          REQUIRE(t.modulus == order);
          REQUIRE(t.raw_coefficient.value() == P(n * k, t.j));
          REQUIRE(t.is_zero == (oracle::residue(P(n * k, t.j), order) == 0));
        }
        if (m % 2 == 1)
          REQUIRE(r.stiefel_whitney.empty());
        const Nat trunc = 2 * n_prime(n, k, 2);
        for (const auto& w : r.stiefel_whitney) {
          REQUIRE(w.degree % 2 == 0);
          REQUIRE(w.degree < trunc);
          REQUIRE(w.present == (oracle::residue(P(n * k, w.degree / 2), 2) == 1));
          if (w.present)
            REQUIRE(m % 4 == 2);
        }
        // W_{n,n-1;m} is parallelizable, so every class must vanish.
        if (k == n - 1) {
          REQUIRE(r.all_pontrjagin_vanish);
          REQUIRE(r.all_sw_vanish);
        }
      }
}
