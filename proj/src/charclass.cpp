#include "stiefel/charclass.hpp"

#include <algorithm>
#include <stdexcept>

#include "stiefel/modp.hpp"
#include "stiefel/torsion.hpp"

namespace stiefel {

namespace {

PontrjaginTerm make_term(const ManifoldParams& params, Nat j, const TorsionProfile& profile) {
  PontrjaginTerm t;
  t.j = j;
  t.raw_coefficient = binomial(params.n() * params.k(), j);
  t.modulus = 2 * j <= params.n() ? profile.order(2 * j) : 1;
  t.reduced = t.raw_coefficient.mod(t.modulus);
  t.is_zero = t.modulus == 1 || t.reduced == 0;
  return t;
}

}  // namespace

PontrjaginTerm pontrjagin_class(const ManifoldParams& params, Nat j) {
  if (j < 1)
    throw std::out_of_range("pontrjagin_class: j must be >= 1");
  return make_term(params, j, torsion_profile(params));
}

std::vector<StiefelWhitneyTerm> stiefel_whitney_classes(const ManifoldParams& params) {
  std::vector<StiefelWhitneyTerm> out;
  // m odd: y1 = 0. m = 0 mod 4: y1^2 = 0.
  if (params.m() % 4 != 2)
    return out;
  const Nat nk = params.n() * params.k();
  const Nat truncation = 2 * n_prime(params.n(), params.k(), 2);
  for (Nat j = 1; 2 * j < truncation; ++j)
    out.push_back({2 * j, binomial_mod(nk, j, 2) == 1});
  return out;
}

CharClassReport char_class_report(const ManifoldParams& params) {
  CharClassReport r;
  const auto profile = torsion_profile(params);
  for (Nat j = 1; 2 * j <= params.n(); ++j)
    r.pontrjagin.push_back(make_term(params, j, profile));
  r.stiefel_whitney = stiefel_whitney_classes(params);
  r.all_pontrjagin_vanish = std::all_of(r.pontrjagin.begin(), r.pontrjagin.end(),
                                        [](const auto& t) { return t.is_zero; });
  r.all_sw_vanish = std::none_of(r.stiefel_whitney.begin(), r.stiefel_whitney.end(),
                                 [](const auto& t) { return t.present; });
  return r;
}

}  // namespace stiefel
