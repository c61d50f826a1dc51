#ifndef QLAB_LATTICE_HPP
#define QLAB_LATTICE_HPP

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qlab/error.hpp"

namespace qlab {

using ElemSet = boost::dynamic_bitset<>;

/// A total function between finite carriers, stored as its image array.
/// No order-theoretic property is assumed; the lattices it is read against
/// are passed to every operation.
struct Map {
  std::vector<Elem> image;

  Map() = default;
  explicit Map(std::vector<Elem> img) : image(std::move(img)) {}

  static Map identity(std::size_t n);
  static Map constant(std::size_t n, Elem value);

  std::size_t size() const { return image.size(); }
  Elem operator()(Elem x) const { return image[x]; }
  Elem& operator[](Elem x) { return image[x]; }
  Elem operator[](Elem x) const { return image[x]; }

  auto operator<=>(const Map&) const = default;
};

using EndoMap = Map;
using LatticeMap = Map;

/// g ∘ f
Map compose(const Map& g, const Map& f);

/// A finite bounded lattice with precomputed order, join and meet tables.
/// Immutable after construction.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Reflexive-transitive closure of a cover relation. Throws
  /// CycleDetected, NotBounded or NotALattice.
  static FiniteLattice from_covers(std::size_t n, std::span<const std::pair<Elem, Elem>> covers,
                                   std::vector<std::string> labels = {});

  /// From a full order table (row-major, leq[x*n+y] != 0 iff x <= y).
  static FiniteLattice from_order(std::size_t n, std::vector<std::uint8_t> leq,
                                  std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  bool leq(Elem x, Elem y) const { return leq_[x * n_ + y] != 0; }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  Elem join(Elem x, Elem y) const { return join_[x * n_ + y]; }
  Elem meet(Elem x, Elem y) const { return meet_[x * n_ + y]; }
  Elem bot() const { return bot_; }
  Elem top() const { return top_; }

  Elem join_of(std::span<const Elem> xs) const;
  Elem meet_of(std::span<const Elem> xs) const;
  Elem join_of(const ElemSet& xs) const;
  Elem meet_of(const ElemSet& xs) const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem x) const;

  /// Hasse diagram as (lower, upper) pairs, lexicographically sorted.
  std::vector<std::pair<Elem, Elem>> covers() const;
  std::vector<Elem> join_irreducibles() const;
  std::vector<Elem> atoms() const;

  /// Principal downset of x as a bitset over the carrier.
  ElemSet downset(Elem x) const;

  bool operator==(const FiniteLattice& other) const {
    return n_ == other.n_ && leq_ == other.leq_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  Elem bot_ = 0;
  Elem top_ = 0;
  std::vector<std::string> labels_;
};

inline FiniteLattice build_lattice(std::size_t n, std::span<const std::pair<Elem, Elem>> covers,
                                   std::vector<std::string> labels = {}) {
  return FiniteLattice::from_covers(n, covers, std::move(labels));
}

// Standard lattices.
FiniteLattice chain(std::size_t k);
FiniteLattice boolean_lattice(std::size_t k);
/// M(n): bot = 0, atoms 1..n, top = n+1.
FiniteLattice diamond(std::size_t n);
/// N5 with bot = 0, a = 1, b = 2, c = 3, top = 4 and b < c.
FiniteLattice pentagon();
FiniteLattice dual(const FiniteLattice& L);
/// Carrier index of (x1, x2) is x1 * |L2| + x2.
FiniteLattice product(const FiniteLattice& L1, const FiniteLattice& L2);

/// The subset with the induced order, when that poset is a lattice.
FiniteLattice induced_lattice(const FiniteLattice& L, std::span<const Elem> subset);

bool is_distributive(const FiniteLattice& L);

bool is_monotone(const FiniteLattice& src, const FiniteLattice& dst, const Map& f);
bool is_sup_preserving(const FiniteLattice& src, const FiniteLattice& dst, const Map& f);
bool is_meet_preserving(const FiniteLattice& src, const FiniteLattice& dst, const Map& f);
inline bool is_monotone(const FiniteLattice& L, const Map& f) { return is_monotone(L, L, f); }
inline bool is_sup_preserving(const FiniteLattice& L, const Map& f) {
  return is_sup_preserving(L, L, f);
}
inline bool is_meet_preserving(const FiniteLattice& L, const Map& f) {
  return is_meet_preserving(L, L, f);
}
bool is_closure_operator(const FiniteLattice& L, const Map& f);

/// rho(f)(y) = join{x | f(x) <= y}, for sup-preserving f : src -> dst.
Map right_adjoint(const FiniteLattice& src, const FiniteLattice& dst, const Map& f);
/// lambda(g)(x) = meet{y | x <= g(y)}, for meet-preserving g : src -> dst.
Map left_adjoint(const FiniteLattice& src, const FiniteLattice& dst, const Map& g);
inline Map right_adjoint(const FiniteLattice& L, const Map& f) { return right_adjoint(L, L, f); }
inline Map left_adjoint(const FiniteLattice& L, const Map& g) { return left_adjoint(L, L, g); }

// Pointwise structure of L^L.
bool pointwise_leq(const FiniteLattice& L, const Map& f, const Map& g);
Map pointwise_join(const FiniteLattice& L, const Map& f, const Map& g);
Map pointwise_meet(const FiniteLattice& L, const Map& f, const Map& g);

/// Number of candidate assignments the join-irreducible enumeration visits.
double sup_endomap_search_space(const FiniteLattice& L);

/// Every sup-preserving endomap of L exactly once, sorted by image array.
std::vector<Map> enumerate_sup_endomaps(const FiniteLattice& L, const Budget& budget = {});

/// All n^n endofunctions, sorted. Used by oracles and property sweeps.
std::vector<Map> enumerate_endofunctions(std::size_t n, const Budget& budget = {});

/// Order automorphisms of L, sorted.
std::vector<Map> order_automorphisms(const FiniteLattice& L);

}  // namespace qlab

#endif  // QLAB_LATTICE_HPP
