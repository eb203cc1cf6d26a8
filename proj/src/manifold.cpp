#include "stiefel/manifold.hpp"

namespace stiefel {

ManifoldParams validate(Nat n, Nat k, Nat m) {
  using K = ParamError::Kind;
  if (k == 0)
    throw ParamError(K::KZero, "invalid parameters: k must be >= 1");
  if (k >= n)
    throw ParamError(K::KNotBelowN, "invalid parameters: k must be < n (got k=" +
                                        std::to_string(k) + ", n=" + std::to_string(n) + ")");
  if (m < 2)
    throw ParamError(K::MBelowTwo, "invalid parameters: m must be >= 2 (got m=" +
                                       std::to_string(m) + ")");
  if (n > kMaxN)
    throw ParamError(K::NTooLarge, "invalid parameters: n must be <= " +
                                       std::to_string(kMaxN));
  return ManifoldParams(n, k, m);
}

BasicInvariants basic_invariants(const ManifoldParams& params) {
  BasicInvariants out;
  out.dimension = params.dimension();
  // W_{n,k} is simply connected and covers W_{n,k;m} with deck group Gamma_m.
  out.pi1_order = params.m();
  out.picard_order = params.m();
  out.euler_characteristic = 0;
  out.orientable = true;
  const bool even_k = params.k() % 2 == 0;
  out.almost_complex_guaranteed = even_k;
  out.complex_structure_guaranteed = even_k && params.n() % params.m() == 0;
  return out;
}

}  // namespace stiefel
