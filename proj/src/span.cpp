#include "stiefel/span.hpp"

#include <algorithm>
#include <stdexcept>

#include "stiefel/charclass.hpp"

namespace stiefel {

std::string_view to_string(TriState t) {
  switch (t) {
  case TriState::No: return "no";
  case TriState::Unknown: return "unknown";
  case TriState::Yes: return "yes";
  }
  return "?";
}

TriState tristate_from_string(std::string_view s) {
  for (auto t : {TriState::No, TriState::Unknown, TriState::Yes})
    if (to_string(t) == s)
      return t;
  throw std::invalid_argument("unknown verdict: " + std::string(s));
}

namespace {

using Notes = std::vector<std::string>;

std::string str(Nat v) { return std::to_string(v); }

void note(Notes* notes, std::string s) {
  if (notes)
    notes->push_back(std::move(s));
}

// Lower bound for span(W_{n,k;m}), independent of m. Each candidate bound
// is an integer form of a strict inequality (span > X gives span >= X+1).
Nat lower_bound_rec(Nat n, Nat k, Notes* notes) {
  if (k == 1 && n == 2) {
    note(notes, "span_lower: W_{2,1;m} = SU(2)/Gamma_m is parallelizable, gives d = 3");
    return 3;
  }
  if (k == 1) {
    note(notes, "span_lower: lens space base case span >= 1 (conservative; no external "
                "lens-space bound used)");
    return 1;
  }
  const std::int64_t d = static_cast<std::int64_t>(k * (2 * n - k));
  const std::int64_t nn = static_cast<std::int64_t>(n);

  // The recursion records only its own result, not the inner candidates.
  const Nat prev = lower_bound_rec(n, k - 1, nullptr);

  std::int64_t best = static_cast<std::int64_t>(k * k);
  note(notes, "span_lower: k^2 trivial summands in the tangent bundle give " + str(k * k));

  const std::int64_t circle = d - 2 * nn + 2;
  note(notes, "span_lower: span > stable span(PW_{n,k}) >= d-2n+1 gives " +
                  std::to_string(circle));
  best = std::max(best, circle);

  if (n % 2 == 0) {
    const std::int64_t quat = d - 2 * nn + 4;
    note(notes, "span_lower: n even, quaternionic reduction, span > d-2n+3 gives " +
                    std::to_string(quat));
    best = std::max(best, quat);
  }

  note(notes, "span_lower: span > stable span(W_{n,k-1;m}) >= " + str(prev) + " gives " +
                  str(prev + 1));
  best = std::max(best, static_cast<std::int64_t>(prev + 1));

  if (k == n - 1) {
    note(notes, "span_lower: k = n-1, W_{n,n-1;m} = SU(n)/Gamma_m is parallelizable, "
                "gives d = " + std::to_string(d));
    best = std::max(best, d);
  }
  return static_cast<Nat>(best);
}

TriState stably_parallelizable_impl(const ManifoldParams& params, Notes* notes) {
  if (params.k() + 1 == params.n()) {
    note(notes, "stably_parallelizable: yes, W_{n,n-1;m} is parallelizable");
    return TriState::Yes;
  }
  const auto cc = char_class_report(params);
  for (const auto& t : cc.pontrjagin) {
    if (!t.is_zero) {
      note(notes, "stably_parallelizable: no, Pontrjagin class p_" + str(t.j) + " = " +
                      str(t.reduced) + " y2^" + str(2 * t.j) + " in Z/" + str(t.modulus) +
                      " (C(nk," + str(t.j) + ") not divisible by m_" + str(2 * t.j) + ")");
      return TriState::No;
    }
  }
  for (const auto& w : cc.stiefel_whitney) {
    if (w.present) {
      note(notes, "stably_parallelizable: no, Stiefel-Whitney class w_" + str(w.degree) +
                      " = y1^" + str(w.degree) + " is nonzero");
      return TriState::No;
    }
  }
  note(notes, "stably_parallelizable: unknown, all Pontrjagin and Stiefel-Whitney "
              "classes vanish");
  return TriState::Unknown;
}

}  // namespace

Nat span_lower_bound(const ManifoldParams& params) {
  return lower_bound_rec(params.n(), params.k(), nullptr);
}

Nat span_upper_bound(const ManifoldParams& params) {
  if (params.k() == 1)
    return radon_hurwitz(2 * params.n()) - 1;
  return params.dimension();
}

bool span_eq_stable_guaranteed(const ManifoldParams& params) {
  const Nat n = params.n(), k = params.k();
  if (k < 2)
    return false;
  return k % 2 == 0 || n % 2 == 1 || n % 4 == 2;
}

TriState stably_parallelizable_verdict(const ManifoldParams& params) {
  return stably_parallelizable_impl(params, nullptr);
}

TriState parallelizable_verdict(const ManifoldParams& params) {
  if (params.k() + 1 == params.n())
    return TriState::Yes;
  return stably_parallelizable_verdict(params) == TriState::No ? TriState::No
                                                               : TriState::Unknown;
}

Nat ext_stable_span_lower_bound(const ManifoldParams& params, Nat s_ext) {
  if (params.m() != 2)
    throw std::invalid_argument("external span bound requires m = 2 (got m=" +
                                str(params.m()) + ")");
  const Nat base = span_lower_bound(params);
  const Nat k2 = params.k() * params.k();
  if (s_ext <= k2)
    return base;
  const Nat improved = s_ext - k2;
  if (improved > params.dimension())
    throw std::invalid_argument("external span value " + str(s_ext) +
                                " implies stable span above the dimension");
  return std::max(base, improved);
}

SpanReport span_report(const ManifoldParams& params, std::optional<Nat> s_ext) {
  SpanReport r;
  auto* notes = &r.provenance;
  const Nat n = params.n(), k = params.k();

  r.span_lower = lower_bound_rec(n, k, notes);

  r.span_upper = span_upper_bound(params);
  if (k == 1)
    note(notes, "span_upper: span(L^n(m)) <= span(S^{2n-1}) = rho(2n)-1 = " + str(r.span_upper));
  else
    note(notes, "span_upper: dimension " + str(r.span_upper));

  r.span_eq_stable_guaranteed = span_eq_stable_guaranteed(params);
  if (k == 1)
    note(notes, "span_eq_stable: not covered for k = 1");
  else if (r.span_eq_stable_guaranteed)
    note(notes, "span_eq_stable: guaranteed (k even, n odd, or n = 2 mod 4)");
  else
    note(notes, "span_eq_stable: not guaranteed (k odd and n = 0 mod 4)");

  r.stable_span_lower = r.span_lower;
  if (s_ext) {
    const Nat ext = ext_stable_span_lower_bound(params, *s_ext);
    note(notes, "stable_span_lower: external span(2nk xi_{2n-1}) = " + str(*s_ext) +
                    " minus k^2 gives " +
                    (*s_ext > k * k ? str(*s_ext - k * k) : std::string("nothing")));
    r.stable_span_lower = std::max(r.stable_span_lower, ext);
    if (r.span_eq_stable_guaranteed && ext > r.span_lower) {
      r.span_lower = ext;
      note(notes, "span_lower: raised to " + str(ext) + " since span = stable span");
    }
  }

  r.stably_parallelizable = stably_parallelizable_impl(params, notes);
  if (k + 1 == n) {
    r.parallelizable = TriState::Yes;
    note(notes, "parallelizable: yes, quotient of SU(n) by a finite subgroup");
  } else if (r.stably_parallelizable == TriState::No) {
    r.parallelizable = TriState::No;
    note(notes, "parallelizable: no, not stably parallelizable");
  } else {
    r.parallelizable = TriState::Unknown;
    note(notes, "parallelizable: unknown");
  }
  return r;
}

}  // namespace stiefel
