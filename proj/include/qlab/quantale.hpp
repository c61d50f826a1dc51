#ifndef QLAB_QUANTALE_HPP
#define QLAB_QUANTALE_HPP

#include <concepts>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlab/lattice.hpp"

namespace qlab {

/// First law a candidate multiplication table breaks, scanned in
/// lexicographic index order.
struct LawViolation {
  ErrorKind kind;
  std::string law;
  std::vector<Elem> witness;
};

/// A finite lattice with an associative multiplication distributing over
/// joins in both arguments. Only obtainable through check_quantale, so every
/// instance is validated; both residual tables are precomputed.
class Quantale {
 public:
  const FiniteLattice& lattice() const { return lattice_; }
  std::size_t size() const { return lattice_.size(); }

  bool leq(Elem x, Elem y) const { return lattice_.leq(x, y); }
  Elem join(Elem x, Elem y) const { return lattice_.join(x, y); }
  Elem meet(Elem x, Elem y) const { return lattice_.meet(x, y); }
  Elem bot() const { return lattice_.bot(); }
  Elem top() const { return lattice_.top(); }

  Elem mult(Elem x, Elem y) const { return mult_[x * size() + y]; }
  /// x \ z = join{y | x*y <= z}
  Elem residual_left(Elem x, Elem z) const { return left_[x * size() + z]; }
  /// z / y = join{x | x*y <= z}
  Elem residual_right(Elem z, Elem y) const { return right_[z * size() + y]; }

  const std::vector<Elem>& mult_table() const { return mult_; }

  bool operator==(const Quantale& other) const {
    return lattice_ == other.lattice_ && mult_ == other.mult_;
  }

 private:
  Quantale(FiniteLattice lattice, std::vector<Elem> mult);
  friend Quantale check_quantale(FiniteLattice lattice, std::vector<Elem> mult);

  FiniteLattice lattice_;
  std::vector<Elem> mult_;
  std::vector<Elem> left_;
  std::vector<Elem> right_;
};

std::optional<LawViolation> find_quantale_violation(const FiniteLattice& lattice,
                                                    std::span<const Elem> mult);

/// Validates the table and returns the quantale; throws NotAssociative,
/// BottomNotAbsorbed or NotDistributive with a witness triple otherwise.
Quantale check_quantale(FiniteLattice lattice, std::vector<Elem> mult);

/// Structural interface shared by materialized quantales and lazy views
/// (see ChuView) so that embedding checks can run against either.
template <class Q>
concept QuantaleLike = requires(const Q& q, Elem x) {
  { q.size() } -> std::convertible_to<std::size_t>;
  { q.leq(x, x) } -> std::convertible_to<bool>;
  { q.join(x, x) } -> std::convertible_to<Elem>;
  { q.meet(x, x) } -> std::convertible_to<Elem>;
  { q.mult(x, x) } -> std::convertible_to<Elem>;
  { q.residual_left(x, x) } -> std::convertible_to<Elem>;
  { q.residual_right(x, x) } -> std::convertible_to<Elem>;
  { q.bot() } -> std::convertible_to<Elem>;
  { q.top() } -> std::convertible_to<Elem>;
};

// ---------------------------------------------------------------------------
// Distinguished elements.

struct ElementFlags {
  bool dualizing = false;
  bool cyclic = false;
  bool weakly_cyclic = false;
};

ElementFlags element_flags(const Quantale& Q, Elem zero);

struct UnitReport {
  std::optional<Elem> unit;
  /// meet over x of (x\x) ∧ (x/x)
  Elem candidate = 0;
  /// x * candidate <= x for all x
  bool right_contractive = false;
  /// candidate * x <= x for all x
  bool left_contractive = false;
};

UnitReport find_unit(const Quantale& Q);

bool is_positive_element(const Quantale& Q, Elem p);
bool is_positive_quantale(const Quantale& Q);

// ---------------------------------------------------------------------------
// Negations, Serre pairs and Frobenius structures.

/// Left negation lneg and right negation rneg on a quantale's carrier.
struct FrobeniusStructure {
  Map lneg;
  Map rneg;

  bool is_girard() const { return lneg == rneg; }
  bool operator==(const FrobeniusStructure&) const = default;
};

/// Diagnostics for a pair (l, r) of endomaps of a quantale. Witnesses are
/// keyed by flag name and hold the first counterexample in scan order.
struct SerrePairReport {
  bool antitone = true;
  bool is_inverse_pair = true;
  bool serre_identity = true;    // x \ l(y) = r(x) / y
  bool serre_identities = true;  // the three derived identities
  bool shift_holds = true;       // x*z <= l(y) iff z*y <= r(x)
  bool is_galois = true;         // y <= l(x) iff x <= r(y)
  bool commutes = true;          // l∘r = r∘l
  bool images_coincide = true;
  std::map<std::string, std::vector<Elem>> witnesses;

  bool is_frobenius() const { return antitone && is_inverse_pair && serre_identity; }
  bool is_serre_gc() const { return is_galois && commutes && shift_holds; }
};

SerrePairReport check_frobenius(const Quantale& Q, const Map& lneg, const Map& rneg);

/// Throws ValidationFailed unless (lneg, rneg) is a Frobenius structure.
FrobeniusStructure validate_frobenius(const Quantale& Q, Map lneg, Map rneg);

/// lneg(x) = 0/x, rneg(x) = x\0. Throws NotDualizing.
FrobeniusStructure frobenius_from_dualizing(const Quantale& Q, Elem zero);

/// lneg(rneg(y) * rneg(x)), after checking it agrees with the three other
/// expressions of the dual multiplication. Throws CoincidenceFailed.
Elem dual_mult(const Quantale& Q, const FrobeniusStructure& F, Elem x, Elem y);

/// Inverse antitone bijections of L.
bool is_duality(const FiniteLattice& L, const Map& l, const Map& r);

// ---------------------------------------------------------------------------
// Constructions.

struct TrivialQuantale {
  Quantale quantale;
  std::optional<FrobeniusStructure> frobenius;
};

/// x*y = bot everywhere. With a duality (l, r) also returns the Frobenius
/// structure; throws NotADuality if (l, r) is not one.
TrivialQuantale trivial_quantale(const FiniteLattice& L,
                                 std::optional<std::pair<Map, Map>> duality = std::nullopt);

/// The Chu construction on Q x Q^op computed on the fly from Q's tables.
/// Element (x1, x2) has index x1 * |Q| + x2.
class ChuView {
 public:
  explicit ChuView(const Quantale& base) : base_(&base), n_(base.size()) {}

  std::size_t size() const { return n_ * n_; }
  Elem encode(Elem x1, Elem x2) const { return static_cast<Elem>(x1 * n_ + x2); }
  Elem first(Elem x) const { return static_cast<Elem>(x / n_); }
  Elem second(Elem x) const { return static_cast<Elem>(x % n_); }

  bool leq(Elem x, Elem y) const {
    return base_->leq(first(x), first(y)) && base_->leq(second(y), second(x));
  }
  Elem join(Elem x, Elem y) const {
    return encode(base_->join(first(x), first(y)), base_->meet(second(x), second(y)));
  }
  Elem meet(Elem x, Elem y) const {
    return encode(base_->meet(first(x), first(y)), base_->join(second(x), second(y)));
  }
  Elem bot() const { return encode(base_->bot(), base_->top()); }
  Elem top() const { return encode(base_->top(), base_->bot()); }

  /// (x1,x2)*(y1,y2) = (x1*y1, y1\x2 ∧ y2/x1)
  Elem mult(Elem x, Elem y) const {
    const Elem x1 = first(x), x2 = second(x), y1 = first(y), y2 = second(y);
    return encode(base_->mult(x1, y1),
                  base_->meet(base_->residual_left(y1, x2), base_->residual_right(y2, x1)));
  }
  /// (x1,x2)\(z1,z2) = (x1\z1 ∧ x2/z2, z2*x1)
  Elem residual_left(Elem x, Elem z) const {
    const Elem x1 = first(x), x2 = second(x), z1 = first(z), z2 = second(z);
    return encode(base_->meet(base_->residual_left(x1, z1), base_->residual_right(x2, z2)),
                  base_->mult(z2, x1));
  }
  /// (z1,z2)/(y1,y2) = (z1/y1 ∧ z2\y2, y1*z2)
  Elem residual_right(Elem z, Elem y) const {
    const Elem z1 = first(z), z2 = second(z), y1 = first(y), y2 = second(y);
    return encode(base_->meet(base_->residual_right(z1, y1), base_->residual_left(z2, y2)),
                  base_->mult(y1, z2));
  }
  /// (x1,x2) -> (x2,x1), both negations.
  Elem negation(Elem x) const { return encode(second(x), first(x)); }

 private:
  const Quantale* base_;
  std::size_t n_;
};

struct ChuQuantale {
  Quantale quantale;
  FrobeniusStructure frobenius;
};

/// Materialized C(Q); validated with check_quantale and check_frobenius.
ChuQuantale chu(const Quantale& Q);

// ---------------------------------------------------------------------------
// Embeddings.

struct ContinuityReport {
  bool preserves_joins = true;
  bool preserves_meets = true;
  bool preserves_mult = true;
  bool preserves_residuals = true;
  std::string failed_law;
  std::vector<Elem> witness;

  bool strongly_continuous() const {
    return preserves_joins && preserves_meets && preserves_mult && preserves_residuals;
  }
};

/// Checks that an injective iota : src -> dst preserves binary and empty
/// joins and meets, multiplication and both residuals. Throws NotInjective.
template <QuantaleLike Target>
ContinuityReport check_strongly_continuous(const Quantale& src, const Target& dst,
                                           const Map& iota) {
  const Elem n = static_cast<Elem>(src.size());
  if (iota.size() != n) throw Error(ErrorKind::InvalidInput, "embedding has wrong arity");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (iota(x) == iota(y)) throw Error(ErrorKind::NotInjective, "embedding identifies", {x, y});

  ContinuityReport rep;
  auto fail = [&rep](bool& flag, std::string law, std::vector<Elem> w) {
    if (rep.failed_law.empty()) {
      rep.failed_law = std::move(law);
      rep.witness = std::move(w);
    }
    flag = false;
  };
  if (iota(src.bot()) != dst.bot()) fail(rep.preserves_joins, "empty join", {});
  if (iota(src.top()) != dst.top()) fail(rep.preserves_meets, "empty meet", {});
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem ix = iota(x), iy = iota(y);
      if (rep.preserves_joins && iota(src.join(x, y)) != dst.join(ix, iy))
        fail(rep.preserves_joins, "join", {x, y});
      if (rep.preserves_meets && iota(src.meet(x, y)) != dst.meet(ix, iy))
        fail(rep.preserves_meets, "meet", {x, y});
      if (rep.preserves_mult && iota(src.mult(x, y)) != dst.mult(ix, iy))
        fail(rep.preserves_mult, "mult", {x, y});
      if (rep.preserves_residuals && (iota(src.residual_left(x, y)) != dst.residual_left(ix, iy)))
        fail(rep.preserves_residuals, "left residual", {x, y});
      if (rep.preserves_residuals && (iota(src.residual_right(x, y)) != dst.residual_right(ix, iy)))
        fail(rep.preserves_residuals, "right residual", {x, y});
    }
  }
  return rep;
}

/// Whether phi is a bijective quantale homomorphism Q1 -> Q2 that is an
/// order isomorphism; with Frobenius structures, also that it transports
/// both negations.
bool is_quantale_isomorphism(const Quantale& Q1, const Quantale& Q2, const Map& phi,
                             const FrobeniusStructure* F1 = nullptr,
                             const FrobeniusStructure* F2 = nullptr);

/// Brute-force isomorphism search; refuses carriers above 12 elements.
std::optional<Map> find_quantale_isomorphism(const Quantale& Q1, const Quantale& Q2);

}  // namespace qlab

#endif  // QLAB_QUANTALE_HPP
