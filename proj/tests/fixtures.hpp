// Small quantales shared by several test binaries.
#ifndef QLAB_TESTS_FIXTURES_HPP
#define QLAB_TESTS_FIXTURES_HPP

#include <functional>

#include "qlab/quantale.hpp"

namespace fixture {

using namespace qlab;

inline Quantale from_op(const FiniteLattice& L, const std::function<Elem(Elem, Elem)>& op) {
  std::vector<Elem> mult(L.size() * L.size());
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y) mult[x * L.size() + y] = op(x, y);
  return check_quantale(L, std::move(mult));
}

/// 3-chain with 2*2 = 1 and every other product 0.
inline Quantale counterexample() {
  return from_op(chain(3), [](Elem x, Elem y) { return x == 2 && y == 2 ? Elem{1} : Elem{0}; });
}

/// k-chain with x*y = min(x, y); unital with unit k-1.
inline Quantale goedel_chain(std::size_t k) {
  return from_op(chain(k), [](Elem x, Elem y) { return std::min(x, y); });
}

/// k-chain with x*y = max(0, x + y - (k-1)); unital with unit k-1.
inline Quantale lukasiewicz_chain(std::size_t k) {
  const Elem t = static_cast<Elem>(k - 1);
  return from_op(chain(k), [t](Elem x, Elem y) { return x + y > t ? x + y - t : Elem{0}; });
}

/// A Boolean lattice with meet as multiplication.
inline Quantale boolean_meet(std::size_t k) {
  const FiniteLattice L = boolean_lattice(k);
  return from_op(L, [&L](Elem x, Elem y) { return L.meet(x, y); });
}

inline Quantale trivial(const FiniteLattice& L) { return trivial_quantale(L).quantale; }

/// Q with a unit adjoined: carrier Q x {0,1} at index 2x + a, and
/// (x,a)*(y,b) = (x*y v [a]y v [b]x, a & b). The new unit is (bot, 1).
inline Quantale adjoin_unit(const Quantale& Q) {
  const FiniteLattice L = product(Q.lattice(), chain(2));
  return from_op(L, [&Q](Elem p, Elem q) {
    const Elem x = p / 2, a = p % 2, y = q / 2, b = q % 2;
    Elem v = Q.mult(x, y);
    if (a) v = Q.join(v, y);
    if (b) v = Q.join(v, x);
    return Elem(v * 2 + (a & b));
  });
}

}  // namespace fixture

#endif  // QLAB_TESTS_FIXTURES_HPP
