#ifndef STIEFEL_SPAN_HPP
#define STIEFEL_SPAN_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stiefel/arith.hpp"
#include "stiefel/manifold.hpp"

namespace stiefel {

// Ordered No < Unknown < Yes.
enum class TriState { No = 0, Unknown = 1, Yes = 2 };

std::string_view to_string(TriState t);  // "no" / "unknown" / "yes"
TriState tristate_from_string(std::string_view s);

struct SpanReport {
  Nat span_lower = 0;
  Nat span_upper = 0;
  Nat stable_span_lower = 0;
  bool span_eq_stable_guaranteed = false;
  TriState parallelizable = TriState::Unknown;
  TriState stably_parallelizable = TriState::Unknown;
  std::vector<std::string> provenance;

  friend bool operator==(const SpanReport&, const SpanReport&) = default;
};

// Largest lower bound the available results give; see span.cpp for the
// individual bounds that are combined.
Nat span_lower_bound(const ManifoldParams& params);

// rho(2n) - 1 for lens spaces (k = 1), the dimension otherwise.
Nat span_upper_bound(const ManifoldParams& params);

// Sufficient condition for span = stable span (2 <= k): k even, n odd, or
// n = 2 mod 4. Always false for k = 1.
bool span_eq_stable_guaranteed(const ManifoldParams& params);

TriState stably_parallelizable_verdict(const ManifoldParams& params);
TriState parallelizable_verdict(const ManifoldParams& params);

// Stable-span lower bound for m = 2 from an externally supplied value of
// span(2nk xi_{2n-1}) over RP^{2n-1}: max(span_lower_bound, s_ext - k^2).
Nat ext_stable_span_lower_bound(const ManifoldParams& params, Nat s_ext);

SpanReport span_report(const ManifoldParams& params, std::optional<Nat> s_ext = std::nullopt);

}  // namespace stiefel

#endif  // STIEFEL_SPAN_HPP
