#include "doctest.h"
#include "stiefel/span.hpp"

#include <algorithm>
#include <stdexcept>

using namespace stiefel;

TEST_CASE("span lower bound examples") {
  CHECK(span_lower_bound(validate(4, 2, 5)) == 8);
  CHECK(span_lower_bound(validate(4, 3, 2)) == 15);
  CHECK(span_lower_bound(validate(5, 2, 2)) == 8);
  CHECK(span_lower_bound(validate(7, 1, 3)) == 1);
}

TEST_CASE("span upper bound examples") {
  CHECK(span_upper_bound(validate(8, 1, 3)) == 8);
  CHECK(span_upper_bound(validate(4, 2, 2)) == 12);
  CHECK(span_upper_bound(validate(4, 3, 2)) == 15);
  CHECK(span_upper_bound(validate(3, 1, 2)) == 1);  // S^5 has span 1
  CHECK(span_upper_bound(validate(2, 1, 5)) == 3);  // S^3
  CHECK(span_upper_bound(validate(4, 1, 5)) == 7);  // S^7
}

TEST_CASE("span = stable span conditions") {
  CHECK(span_eq_stable_guaranteed(validate(4, 2, 7)));
  CHECK_FALSE(span_eq_stable_guaranteed(validate(4, 3, 2)));
  CHECK(span_eq_stable_guaranteed(validate(6, 3, 2)));
  CHECK(span_eq_stable_guaranteed(validate(7, 3, 2)));
  CHECK_FALSE(span_eq_stable_guaranteed(validate(7, 1, 2)));
}

TEST_CASE("verdict examples") {
  CHECK(stably_parallelizable_verdict(validate(4, 2, 3)) == TriState::No);
  CHECK(stably_parallelizable_verdict(validate(4, 3, 9)) == TriState::Yes);
  CHECK(stably_parallelizable_verdict(validate(4, 2, 2)) == TriState::Unknown);

  CHECK(parallelizable_verdict(validate(4, 3, 2)) == TriState::Yes);
  CHECK(parallelizable_verdict(validate(5, 2, 2)) == TriState::No);
  CHECK(parallelizable_verdict(validate(4, 2, 2)) == TriState::Unknown);
}

TEST_CASE("external stable span bound") {
  const auto p = validate(4, 2, 2);
  CHECK(ext_stable_span_lower_bound(p, 13) == 9);
  for (Nat s : {0, 1, 4})
    CHECK(ext_stable_span_lower_bound(p, s) == span_lower_bound(p));
  CHECK(ext_stable_span_lower_bound(p, 10) == 8);  // 6 < existing 8

  const auto q = validate(4, 3, 2);
  for (Nat s = 0; s <= 24; ++s)
    CHECK(ext_stable_span_lower_bound(q, s) == 15);

  CHECK_THROWS_AS(ext_stable_span_lower_bound(validate(4, 2, 3), 13), std::invalid_argument);
  CHECK_THROWS_AS(ext_stable_span_lower_bound(p, 100), std::invalid_argument);

  // span inherits the improvement only when span = stable span is guaranteed
  auto r = span_report(p, Nat{13});
  CHECK(r.stable_span_lower == 9);
  CHECK(r.span_lower == 9);
  const auto odd = validate(8, 3, 2);  // k odd, n = 0 mod 4
  REQUIRE_FALSE(span_eq_stable_guaranteed(odd));
  const Nat base = span_lower_bound(odd);
  r = span_report(odd, base + 9 + 5);
  CHECK(r.stable_span_lower == base + 5);
  CHECK(r.span_lower == base);
}

TEST_CASE("span report provenance names each source") {
  const auto r = span_report(validate(4, 2, 5));
  CHECK(r.span_lower == 8);
  CHECK(r.span_upper == 12);
  CHECK(r.stably_parallelizable == TriState::No);  // 5 does not divide nk = 8
  const auto has = [&](std::string_view needle) {
    return std::any_of(r.provenance.begin(), r.provenance.end(),
                       [&](const std::string& s) { return s.find(needle) != std::string::npos; });
  };
  CHECK(has("quaternionic"));
  CHECK(has("k^2"));
  CHECK(has("Pontrjagin class p_1"));

  const auto sw = span_report(validate(5, 2, 2));
  CHECK(std::any_of(sw.provenance.begin(), sw.provenance.end(),
                    [](const std::string& s) { return s.find("w_4") != std::string::npos; }));
}

TEST_CASE("span bound properties") {
  for (Nat n = 2; n <= 30; ++n)
    for (Nat k = 1; k < n; ++k) {
      Nat prev = 0;
      for (Nat m = 2; m <= 30; ++m) {
        const auto params = validate(n, k, m);
        const Nat lo = span_lower_bound(params);
        const Nat hi = span_upper_bound(params);
        REQUIRE(lo >= 1);
        REQUIRE(lo <= hi);
        REQUIRE(hi <= params.dimension());
        if (k >= 2)
          REQUIRE(lo >= span_lower_bound(validate(n, k - 1, m)) + 1);
        if (m > 2)
          REQUIRE(lo == prev);  // the lower bound does not depend on m
        prev = lo;

        const auto r = span_report(params);
        REQUIRE(r.span_lower == lo);
        REQUIRE(r.span_upper == hi);
        REQUIRE(r.stable_span_lower >= r.span_lower);
        REQUIRE(r.parallelizable <= r.stably_parallelizable);
        REQUIRE(r.parallelizable == parallelizable_verdict(params));
        REQUIRE(r.stably_parallelizable == stably_parallelizable_verdict(params));
        if (k == n - 1) {
          REQUIRE(lo == params.dimension());
          REQUIRE(hi == params.dimension());
          REQUIRE(r.parallelizable == TriState::Yes);
          REQUIRE(r.stably_parallelizable == TriState::Yes);
        }
        if (k > 1 && k + 2 <= n && (n * k) % m != 0)
          REQUIRE(r.stably_parallelizable == TriState::No);
      }
    }
}

TEST_CASE("TriState strings and order") {
  CHECK(TriState::No < TriState::Unknown);
  CHECK(TriState::Unknown < TriState::Yes);
  for (auto t : {TriState::No, TriState::Unknown, TriState::Yes})
    CHECK(tristate_from_string(to_string(t)) == t);
  CHECK_THROWS_AS(tristate_from_string("maybe"), std::invalid_argument);
}
