#ifndef QLAB_NUCLEUS_HPP
#define QLAB_NUCLEUS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlab/quantale.hpp"

namespace qlab {

// ---------------------------------------------------------------------------
// Nuclei and quotients.

struct NucleusCheck {
  bool ok = true;
  std::string failed_law;
  std::vector<Elem> witness;
  explicit operator bool() const { return ok; }
};

/// Closure-operator laws plus j(x)*j(y) <= j(x*y).
NucleusCheck is_nucleus(const Quantale& Q, const Map& j);

/// Q_j: the fixed points of a nucleus with x *_j y = j(x*y). Quotient
/// element i stands for the ambient element closed[i].
struct QuotientQuantale {
  Map nucleus;
  std::vector<Elem> closed;
  Quantale quantale;

  /// Position of j(x) in `closed`.
  Elem project(Elem x) const;
  Elem embed(Elem i) const { return closed[i]; }
};

/// Throws NotANucleus. Verifies that j : Q -> Q_j is a surjective quantale
/// homomorphism and that joins in Q_j are j applied to ambient joins.
QuotientQuantale quotient_quantale(const Quantale& Q, const Map& j);

/// Nucleus, quotient and the induced Frobenius structure of a Serre Galois
/// connection.
struct SerreQuotient {
  QuotientQuantale quotient;
  FrobeniusStructure frobenius;
};

/// j = l∘r; (l, r) restricted to Q_j. Throws NotSerreGC naming the failed flag.
SerreQuotient serre_gc_quotient(const Quantale& Q, const Map& l, const Map& r);

/// (l∘j, r∘j) for a Serre duality (l, r) on Q_j, given on quotient indices.
/// Checks the result is a Serre GC on Q whose quotient gives back
/// (Q_j, l, r). Throws NotSerreDualityOnQuotient.
std::pair<Map, Map> lift_serre(const Quantale& Q, const QuotientQuantale& Qj,
                               const FrobeniusStructure& F);

/// The element 0 with r(x) = x\0 and l(x) = 0/x, if any. On a unital
/// quantale with a Serre GC the search must succeed; failure throws
/// ValidationFailed.
std::optional<Elem> representable_flags(const Quantale& Q, const Map& l, const Map& r);

/// (l, r) with r(x) = x\0 and l(x) = 0/x.
std::pair<Map, Map> represented_pair(const Quantale& Q, Elem zero);

// ---------------------------------------------------------------------------
// Semigroups, relations and phase quantales.

class FiniteSemigroup {
 public:
  /// Throws NotAssociative.
  FiniteSemigroup(std::size_t n, std::vector<Elem> op);

  static FiniteSemigroup cyclic_group(std::size_t n);
  /// x*y = x
  static FiniteSemigroup left_zero(std::size_t n);
  /// The multiplicative reduct of a quantale.
  static FiniteSemigroup of_quantale(const Quantale& Q);

  std::size_t size() const { return n_; }
  Elem mul(Elem x, Elem y) const { return op_[x * n_ + y]; }
  const std::vector<Elem>& table() const { return op_; }

 private:
  std::size_t n_;
  std::vector<Elem> op_;
};

struct BinaryRelation {
  std::size_t n = 0;
  std::vector<std::uint8_t> rel;

  BinaryRelation() = default;
  BinaryRelation(std::size_t size, std::vector<std::uint8_t> table);
  static BinaryRelation empty(std::size_t n);
  static BinaryRelation total(std::size_t n);

  bool operator()(Elem x, Elem y) const { return rel[x * n + y] != 0; }
  bool symmetric() const;
};

/// The free quantale (P(S), •) with subsets as bitsets. Nothing is
/// materialized unless asked.
class PowersetQuantale {
 public:
  /// Throws BudgetExceeded when |S| > budget.max_powerset.
  explicit PowersetQuantale(FiniteSemigroup S, const Budget& budget = {});

  const FiniteSemigroup& semigroup() const { return s_; }
  std::size_t carrier_size() const { return s_.size(); }

  ElemSet empty() const { return ElemSet(s_.size()); }
  ElemSet full() const { return ~empty(); }
  ElemSet singleton(Elem x) const;

  /// {x·y | x in X, y in Y}
  ElemSet product(const ElemSet& X, const ElemSet& Y) const;
  /// X\Y = {s | x·s in Y for all x in X}
  ElemSet residual_left(const ElemSet& X, const ElemSet& Y) const;
  /// Y/X = {s | s·x in Y for all x in X}
  ElemSet residual_right(const ElemSet& Y, const ElemSet& X) const;

  /// Table form with element index = bitmask; only for |S| <= 8.
  Quantale materialize() const;
  ElemSet subset_of_index(Elem mask) const;
  Elem index_of_subset(const ElemSet& X) const;

 private:
  FiniteSemigroup s_;
};

/// The Galois connection on P(S) induced by a relation R:
/// r(Z) = {u | zRu for all z in Z}, l(Y) = {u | uRy for all y in Y}.
class RelationGalois {
 public:
  RelationGalois(const FiniteSemigroup& S, const BinaryRelation& R);

  ElemSet r(const ElemSet& Z) const;
  ElemSet l(const ElemSet& Y) const;
  ElemSet j(const ElemSet& X) const { return l(r(X)); }

  /// x·y R z iff x R y·z, for all triples.
  bool associative() const { return !assoc_witness_; }
  const std::optional<std::vector<Elem>>& associativity_witness() const { return assoc_witness_; }
  /// every r({x}) lies in the image of l
  bool comm1() const { return comm1_; }
  /// every l({y}) lies in the image of r
  bool comm2() const { return comm2_; }
  bool weakly_symmetric() const { return comm1_ && comm2_; }

  /// The fixed points of j: intersections of the sets r({x}) and S.
  /// Sorted; throws BudgetExceeded past max_closed sets.
  std::vector<ElemSet> closed_sets(std::size_t max_closed) const;

 private:
  std::size_t n_;
  std::vector<ElemSet> right_rows_;  // r({x})
  std::vector<ElemSet> left_cols_;   // l({y})
  std::optional<std::vector<Elem>> assoc_witness_;
  bool comm1_ = true;
  bool comm2_ = true;
};

RelationGalois relation_galois(const FiniteSemigroup& S, const BinaryRelation& R);

/// The quotient of (P(S), •) by the nucleus of the relation-induced Serre
/// Galois connection, carried on the closed sets only.
struct PhaseQuantale {
  std::vector<ElemSet> closed;
  Quantale quantale;
  FrobeniusStructure frobenius;

  std::optional<Elem> index_of(const ElemSet& X) const;
};

/// Throws NotAssociativeRelation or NotWeaklySymmetric.
PhaseQuantale phase_quantale(const FiniteSemigroup& S, const BinaryRelation& R,
                             std::size_t max_closed = 4096);

struct IsoReport {
  bool relation_associative = false;
  bool relation_weakly_symmetric = false;
  bool closed_are_principal_downsets = false;
  bool join_inverts_downset = false;
  bool homomorphism = false;
  bool negations_preserved = false;
  std::size_t closed_count = 0;
  /// x -> index of the closed set ↓x
  Map downset_map;

  bool verified() const {
    return relation_associative && relation_weakly_symmetric && closed_are_principal_downsets &&
           join_inverts_downset && homomorphism && negations_preserved;
  }
};

/// x R y iff x <= lneg(y) on Q as a semigroup; checks that x -> ↓x is a
/// negation-preserving isomorphism onto the phase quantale with inverse
/// X -> join X. Throws ValidationFailed if F is not a Frobenius structure.
IsoReport represent_frobenius(const Quantale& Q, const FrobeniusStructure& F);

}  // namespace qlab

#endif  // QLAB_NUCLEUS_HPP
