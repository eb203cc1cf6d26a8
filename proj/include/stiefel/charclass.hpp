#ifndef STIEFEL_CHARCLASS_HPP
#define STIEFEL_CHARCLASS_HPP

#include <vector>

#include "stiefel/arith.hpp"
#include "stiefel/manifold.hpp"

namespace stiefel {

// p_j = C(nk, j) y2^{2j}, read in a cyclic group of order m_{2j}
// (order 1 once 2j > n).
struct PontrjaginTerm {
  Nat j = 0;
  BigNat raw_coefficient;
  Nat modulus = 1;
  Nat reduced = 0;
  bool is_zero = true;

  friend bool operator==(const PontrjaginTerm&, const PontrjaginTerm&) = default;
};

// w_{2j} = C(nk, j) y1^{2j}; only possible when m = 2 mod 4.
struct StiefelWhitneyTerm {
  Nat degree = 0;
  bool present = false;

  friend bool operator==(const StiefelWhitneyTerm&, const StiefelWhitneyTerm&) = default;
};

struct CharClassReport {
  std::vector<PontrjaginTerm> pontrjagin;  // 1 <= j <= floor(n/2)
  std::vector<StiefelWhitneyTerm> stiefel_whitney;
  bool all_pontrjagin_vanish = true;
  bool all_sw_vanish = true;

  friend bool operator==(const CharClassReport&, const CharClassReport&) = default;
};

PontrjaginTerm pontrjagin_class(const ManifoldParams& params, Nat j);

// Empty unless m = 2 mod 4. Otherwise one entry per even degree 2j below
// the mod-2 truncation N, flagged present when C(nk, j) is odd.
std::vector<StiefelWhitneyTerm> stiefel_whitney_classes(const ManifoldParams& params);

CharClassReport char_class_report(const ManifoldParams& params);

}  // namespace stiefel

#endif  // STIEFEL_CHARCLASS_HPP
