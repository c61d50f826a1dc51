#include "qlab/nucleus.hpp"

#include <algorithm>
#include <set>

namespace qlab {

NucleusCheck is_nucleus(const Quantale& Q, const Map& j) {
  const Elem n = static_cast<Elem>(Q.size());
  NucleusCheck c;
  auto fail = [&c](const char* law, std::vector<Elem> w) {
    c = NucleusCheck{false, law, std::move(w)};
    return c;
  };
  if (j.size() != n) return fail("arity", {});
  for (Elem x = 0; x < n; ++x) {
    if (!Q.leq(x, j(x))) return fail("increasing", {x});
    if (j(j(x)) != j(x)) return fail("idempotent", {x});
    for (Elem y = 0; y < n; ++y)
      if (Q.leq(x, y) && !Q.leq(j(x), j(y))) return fail("isotone", {x, y});
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!Q.leq(Q.mult(j(x), j(y)), j(Q.mult(x, y))))
        return fail("j(x)*j(y) <= j(x*y)", {x, y});
  return c;
}

Elem QuotientQuantale::project(Elem x) const {
  const auto it = std::lower_bound(closed.begin(), closed.end(), nucleus(x));
  return static_cast<Elem>(it - closed.begin());
}

QuotientQuantale quotient_quantale(const Quantale& Q, const Map& j) {
  if (auto c = is_nucleus(Q, j); !c)
    throw Error(ErrorKind::NotANucleus, "map is not a nucleus: " + c.failed_law, c.witness);
  const Elem n = static_cast<Elem>(Q.size());
  std::vector<Elem> closed;
  for (Elem x = 0; x < n; ++x)
    if (j(x) == x) closed.push_back(x);
  const std::size_t k = closed.size();

  FiniteLattice Lj = induced_lattice(Q.lattice(), closed);
  auto pos = [&](Elem x) {
    return static_cast<Elem>(std::lower_bound(closed.begin(), closed.end(), x) - closed.begin());
  };
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) {
      if (Lj.join(a, b) != pos(j(Q.join(closed[a], closed[b]))) ||
          Lj.meet(a, b) != pos(Q.meet(closed[a], closed[b])))
        throw Error(ErrorKind::ValidationFailed, "quotient lattice operations disagree",
                    {closed[a], closed[b]});
    }
  std::vector<Elem> mult(k * k);
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) mult[a * k + b] = pos(j(Q.mult(closed[a], closed[b])));

  QuotientQuantale out{j, closed, check_quantale(std::move(Lj), std::move(mult))};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (out.project(Q.mult(x, y)) != out.quantale.mult(out.project(x), out.project(y)))
        throw Error(ErrorKind::ValidationFailed, "j is not multiplicative onto Q_j", {x, y});
  return out;
}

SerreQuotient serre_gc_quotient(const Quantale& Q, const Map& l, const Map& r) {
  const SerrePairReport rep = check_frobenius(Q, l, r);
  for (const char* flag : {"is_galois", "commutes", "shift_holds"})
    if (auto it = rep.witnesses.find(flag); it != rep.witnesses.end())
      throw Error(ErrorKind::NotSerreGC, std::string("pair fails ") + flag, it->second);

  QuotientQuantale Qj = quotient_quantale(Q, compose(l, r));
  const std::size_t k = Qj.closed.size();
  Map lj, rj;
  lj.image.resize(k);
  rj.image.resize(k);
  for (Elem i = 0; i < k; ++i) {
    lj.image[i] = Qj.project(l(Qj.closed[i]));
    rj.image[i] = Qj.project(r(Qj.closed[i]));
    if (Qj.closed[lj[i]] != l(Qj.closed[i]) || Qj.closed[rj[i]] != r(Qj.closed[i]))
      throw Error(ErrorKind::ValidationFailed, "negation leaves Q_j", {Qj.closed[i]});
  }
  FrobeniusStructure F = validate_frobenius(Qj.quantale, std::move(lj), std::move(rj));
  return SerreQuotient{std::move(Qj), std::move(F)};
}

std::pair<Map, Map> lift_serre(const Quantale& Q, const QuotientQuantale& Qj,
                               const FrobeniusStructure& F) {
  const SerrePairReport onq = check_frobenius(Qj.quantale, F.lneg, F.rneg);
  if (!onq.antitone || !onq.is_inverse_pair || !onq.shift_holds)
    throw Error(ErrorKind::NotSerreDualityOnQuotient, "pair is not a Serre duality on Q_j");

  const Elem n = static_cast<Elem>(Q.size());
  Map l, r;
  l.image.resize(n);
  r.image.resize(n);
  for (Elem x = 0; x < n; ++x) {
    l.image[x] = Qj.embed(F.lneg(Qj.project(x)));
    r.image[x] = Qj.embed(F.rneg(Qj.project(x)));
  }
  const SerreQuotient again = serre_gc_quotient(Q, l, r);
  if (again.quotient.closed != Qj.closed || !(again.quotient.quantale == Qj.quantale) ||
      !(again.frobenius == F))
    throw Error(ErrorKind::ValidationFailed, "lifted pair does not reproduce the quotient");
  return {std::move(l), std::move(r)};
}

std::pair<Map, Map> represented_pair(const Quantale& Q, Elem zero) {
  Map l, r;
  l.image.resize(Q.size());
  r.image.resize(Q.size());
  for (Elem x = 0; x < Q.size(); ++x) {
    l.image[x] = Q.residual_right(zero, x);
    r.image[x] = Q.residual_left(x, zero);
  }
  return {std::move(l), std::move(r)};
}

std::optional<Elem> representable_flags(const Quantale& Q, const Map& l, const Map& r) {
  for (Elem zero = 0; zero < Q.size(); ++zero) {
    auto [lz, rz] = represented_pair(Q, zero);
    if (lz == l && rz == r) return zero;
  }
  if (find_unit(Q).unit && check_frobenius(Q, l, r).is_serre_gc())
    throw Error(ErrorKind::ValidationFailed,
                "Serre Galois connection on a unital quantale is not representable");
  return std::nullopt;
}

// ---------------------------------------------------------------------------

FiniteSemigroup::FiniteSemigroup(std::size_t n, std::vector<Elem> op) : n_(n), op_(std::move(op)) {
  if (op_.size() != n_ * n_) throw Error(ErrorKind::InvalidInput, "semigroup table has wrong shape");
  for (Elem v : op_)
    if (v >= n_) throw Error(ErrorKind::InvalidInput, "semigroup entry out of range", {v});
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      for (Elem z = 0; z < n_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          throw Error(ErrorKind::NotAssociative, "semigroup operation", {x, y, z});
}

FiniteSemigroup FiniteSemigroup::cyclic_group(std::size_t n) {
  std::vector<Elem> op(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) op[x * n + y] = static_cast<Elem>((x + y) % n);
  return FiniteSemigroup(n, std::move(op));
}

FiniteSemigroup FiniteSemigroup::left_zero(std::size_t n) {
  std::vector<Elem> op(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) op[x * n + y] = static_cast<Elem>(x);
  return FiniteSemigroup(n, std::move(op));
}

FiniteSemigroup FiniteSemigroup::of_quantale(const Quantale& Q) {
  return FiniteSemigroup(Q.size(), Q.mult_table());
}

BinaryRelation::BinaryRelation(std::size_t size, std::vector<std::uint8_t> table)
    : n(size), rel(std::move(table)) {
  if (rel.size() != n * n) throw Error(ErrorKind::InvalidInput, "relation table has wrong shape");
}

BinaryRelation BinaryRelation::empty(std::size_t n) {
  return BinaryRelation(n, std::vector<std::uint8_t>(n * n, 0));
}

BinaryRelation BinaryRelation::total(std::size_t n) {
  return BinaryRelation(n, std::vector<std::uint8_t>(n * n, 1));
}

bool BinaryRelation::symmetric() const {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if ((*this)(x, y) != (*this)(y, x)) return false;
  return true;
}

// ---------------------------------------------------------------------------

PowersetQuantale::PowersetQuantale(FiniteSemigroup S, const Budget& budget) : s_(std::move(S)) {
  if (s_.size() > budget.max_powerset)
    throw Error(ErrorKind::BudgetExceeded, "semigroup exceeds the powerset budget");
}

ElemSet PowersetQuantale::singleton(Elem x) const {
  ElemSet s = empty();
  s.set(x);
  return s;
}

ElemSet PowersetQuantale::product(const ElemSet& X, const ElemSet& Y) const {
  ElemSet out = empty();
  for (auto x = X.find_first(); x != ElemSet::npos; x = X.find_next(x))
    for (auto y = Y.find_first(); y != ElemSet::npos; y = Y.find_next(y))
      out.set(s_.mul(Elem(x), Elem(y)));
  return out;
}

ElemSet PowersetQuantale::residual_left(const ElemSet& X, const ElemSet& Y) const {
  ElemSet out = empty();
  for (Elem s = 0; s < s_.size(); ++s) {
    bool ok = true;
    for (auto x = X.find_first(); x != ElemSet::npos && ok; x = X.find_next(x))
      ok = Y.test(s_.mul(Elem(x), s));
    if (ok) out.set(s);
  }
  return out;
}

ElemSet PowersetQuantale::residual_right(const ElemSet& Y, const ElemSet& X) const {
  ElemSet out = empty();
  for (Elem s = 0; s < s_.size(); ++s) {
    bool ok = true;
    for (auto x = X.find_first(); x != ElemSet::npos && ok; x = X.find_next(x))
      ok = Y.test(s_.mul(s, Elem(x)));
    if (ok) out.set(s);
  }
  return out;
}

ElemSet PowersetQuantale::subset_of_index(Elem mask) const {
  return ElemSet(s_.size(), static_cast<unsigned long>(mask));
}

Elem PowersetQuantale::index_of_subset(const ElemSet& X) const {
  return static_cast<Elem>(X.to_ulong());
}

Quantale PowersetQuantale::materialize() const {
  if (s_.size() > 8) throw Error(ErrorKind::BudgetExceeded, "materialization limited to |S| <= 8");
  const Elem N = Elem{1} << s_.size();
  std::vector<std::uint8_t> leq(std::size_t{N} * N);
  std::vector<Elem> mult(std::size_t{N} * N);
  for (Elem a = 0; a < N; ++a)
    for (Elem b = 0; b < N; ++b) {
      leq[a * N + b] = (a & ~b) == 0;
      mult[a * N + b] = index_of_subset(product(subset_of_index(a), subset_of_index(b)));
    }
  return check_quantale(FiniteLattice::from_order(N, std::move(leq)), std::move(mult));
}

// ---------------------------------------------------------------------------

RelationGalois::RelationGalois(const FiniteSemigroup& S, const BinaryRelation& R) : n_(S.size()) {
  if (R.n != n_) throw Error(ErrorKind::InvalidInput, "relation and semigroup sizes differ");
  right_rows_.assign(n_, ElemSet(n_));
  left_cols_.assign(n_, ElemSet(n_));
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if (R(x, y)) {
        right_rows_[x].set(y);
        left_cols_[y].set(x);
      }
  for (Elem x = 0; x < n_ && !assoc_witness_; ++x)
    for (Elem y = 0; y < n_ && !assoc_witness_; ++y)
      for (Elem z = 0; z < n_; ++z)
        if (R(S.mul(x, y), z) != R(x, S.mul(y, z))) {
          assoc_witness_ = std::vector<Elem>{x, y, z};
          break;
        }
  for (Elem x = 0; x < n_; ++x) {
    comm1_ = comm1_ && l(r(right_rows_[x])) == right_rows_[x];
    comm2_ = comm2_ && r(l(left_cols_[x])) == left_cols_[x];
  }
}

ElemSet RelationGalois::r(const ElemSet& Z) const {
  ElemSet out(n_);
  out.set();
  for (auto z = Z.find_first(); z != ElemSet::npos; z = Z.find_next(z)) out &= right_rows_[z];
  return out;
}

ElemSet RelationGalois::l(const ElemSet& Y) const {
  ElemSet out(n_);
  out.set();
  for (auto y = Y.find_first(); y != ElemSet::npos; y = Y.find_next(y)) out &= left_cols_[y];
  return out;
}

std::vector<ElemSet> RelationGalois::closed_sets(std::size_t max_closed) const {
  ElemSet full(n_);
  full.set();
  std::set<ElemSet> family{full};
  std::vector<ElemSet> frontier{full};
  // Close {S} under intersection with each generator r({x}).
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (const ElemSet& X : frontier)
      for (const ElemSet& g : right_rows_) {
        ElemSet Y = X & g;
        if (family.insert(Y).second) {
          if (family.size() > max_closed)
            throw Error(ErrorKind::BudgetExceeded, "closed-set family exceeds its budget");
          next.push_back(std::move(Y));
        }
      }
    frontier = std::move(next);
  }
  return {family.begin(), family.end()};
}

RelationGalois relation_galois(const FiniteSemigroup& S, const BinaryRelation& R) {
  return RelationGalois(S, R);
}

std::optional<Elem> PhaseQuantale::index_of(const ElemSet& X) const {
  const auto it = std::lower_bound(closed.begin(), closed.end(), X);
  if (it == closed.end() || *it != X) return std::nullopt;
  return static_cast<Elem>(it - closed.begin());
}

PhaseQuantale phase_quantale(const FiniteSemigroup& S, const BinaryRelation& R,
                             std::size_t max_closed) {
  const RelationGalois G(S, R);
  if (!G.associative())
    throw Error(ErrorKind::NotAssociativeRelation, "x·y R z iff x R y·z fails",
                *G.associativity_witness());
  if (!G.weakly_symmetric())
    throw Error(ErrorKind::NotWeaklySymmetric,
                std::string("images of l and r differ (") + (G.comm1() ? "" : "comm1 ") +
                    (G.comm2() ? "" : "comm2") + ")");

  // Products are computed directly; the full powerset is never built.
  Budget unbounded;
  unbounded.max_powerset = static_cast<unsigned>(S.size());
  const PowersetQuantale P(S, unbounded);

  const std::vector<ElemSet> closed = G.closed_sets(max_closed);
  const std::size_t k = closed.size();
  auto index = [&](const ElemSet& X) {
    const auto it = std::lower_bound(closed.begin(), closed.end(), X);
    if (it == closed.end() || *it != X)
      throw Error(ErrorKind::ValidationFailed, "set expected to be closed is not");
    return static_cast<Elem>(it - closed.begin());
  };
  std::vector<std::uint8_t> leq(k * k);
  std::vector<Elem> mult(k * k);
  Map lneg, rneg;
  lneg.image.resize(k);
  rneg.image.resize(k);
  for (Elem a = 0; a < k; ++a) {
    if (G.j(closed[a]) != closed[a])
      throw Error(ErrorKind::ValidationFailed, "generated set is not j-closed", {a});
    lneg.image[a] = index(G.l(closed[a]));
    rneg.image[a] = index(G.r(closed[a]));
    for (Elem b = 0; b < k; ++b) {
      leq[a * k + b] = closed[a].is_subset_of(closed[b]);
      mult[a * k + b] = index(G.j(P.product(closed[a], closed[b])));
    }
  }
  Quantale Q = check_quantale(FiniteLattice::from_order(k, std::move(leq)), std::move(mult));
  FrobeniusStructure F = validate_frobenius(Q, std::move(lneg), std::move(rneg));
  return PhaseQuantale{closed, std::move(Q), std::move(F)};
}

// ---------------------------------------------------------------------------

IsoReport represent_frobenius(const Quantale& Q, const FrobeniusStructure& F) {
  validate_frobenius(Q, F.lneg, F.rneg);
  const Elem n = static_cast<Elem>(Q.size());
  const FiniteSemigroup S = FiniteSemigroup::of_quantale(Q);
  std::vector<std::uint8_t> table(std::size_t{n} * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) table[x * n + y] = Q.leq(x, F.lneg(y));
  const BinaryRelation R(n, std::move(table));

  IsoReport rep;
  const RelationGalois G(S, R);
  rep.relation_associative = G.associative();
  rep.relation_weakly_symmetric = G.weakly_symmetric();
  if (!rep.relation_associative || !rep.relation_weakly_symmetric) return rep;

  const PhaseQuantale P = phase_quantale(S, R, std::size_t{n} + 1);
  rep.closed_count = P.closed.size();

  rep.downset_map.image.resize(n);
  rep.closed_are_principal_downsets = P.closed.size() == n;
  for (Elem x = 0; x < n && rep.closed_are_principal_downsets; ++x) {
    const auto i = P.index_of(Q.lattice().downset(x));
    rep.closed_are_principal_downsets = i.has_value();
    if (i) rep.downset_map.image[x] = *i;
  }
  if (!rep.closed_are_principal_downsets) return rep;

  rep.join_inverts_downset = true;
  for (Elem i = 0; i < P.closed.size(); ++i) {
    const Elem x = Q.lattice().join_of(P.closed[i]);
    rep.join_inverts_downset = rep.join_inverts_downset && rep.downset_map(x) == i;
  }
  rep.homomorphism = is_quantale_isomorphism(Q, P.quantale, rep.downset_map);
  rep.negations_preserved =
      is_quantale_isomorphism(Q, P.quantale, rep.downset_map, &F, &P.frobenius);
  return rep;
}

}  // namespace qlab
