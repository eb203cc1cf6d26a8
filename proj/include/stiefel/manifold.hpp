#ifndef STIEFEL_MANIFOLD_HPP
#define STIEFEL_MANIFOLD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "stiefel/arith.hpp"

namespace stiefel {

// Upper limit on n. Profiles and Poincare polynomials are dense in n.
inline constexpr Nat kMaxN = 4096;

class ParamError : public std::invalid_argument {
public:
  enum class Kind { KZero, KNotBelowN, MBelowTwo, NTooLarge };

  ParamError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// The triple (n, k, m) indexing W_{n,k;m} = W_{n,k} / Gamma_m.
// Only obtainable through validate(), so 1 <= k < n and m >= 2 hold.
class ManifoldParams {
public:
  Nat n() const { return n_; }
  Nat k() const { return k_; }
  Nat m() const { return m_; }

  Nat dimension() const { return k_ * (2 * n_ - k_); }

  friend ManifoldParams validate(Nat n, Nat k, Nat m);
  friend bool operator==(const ManifoldParams&, const ManifoldParams&) = default;

private:
  ManifoldParams(Nat n, Nat k, Nat m) : n_(n), k_(k), m_(m) {}
  Nat n_;
  Nat k_;
  Nat m_;
};

ManifoldParams validate(Nat n, Nat k, Nat m);

struct BasicInvariants {
  Nat dimension = 0;
  Nat pi1_order = 0;
  std::int64_t euler_characteristic = 0;
  bool orientable = true;
  Nat picard_order = 0;
  // "Guaranteed" flags: false means not asserted, not that the structure
  // fails to exist.
  bool almost_complex_guaranteed = false;
  bool complex_structure_guaranteed = false;

  friend bool operator==(const BasicInvariants&, const BasicInvariants&) = default;
};

BasicInvariants basic_invariants(const ManifoldParams& params);

}  // namespace stiefel

#endif  // STIEFEL_MANIFOLD_HPP
