#include "qlab/quantale.hpp"

#include <algorithm>
#include <numeric>

namespace qlab {

Quantale::Quantale(FiniteLattice lattice, std::vector<Elem> mult)
    : lattice_(std::move(lattice)), mult_(std::move(mult)) {
  const std::size_t n = lattice_.size();
  left_.assign(n * n, lattice_.bot());
  right_.assign(n * n, lattice_.bot());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem p = mult_[x * n + y];
      for (Elem z = 0; z < n; ++z) {
        if (!lattice_.leq(p, z)) continue;
        left_[x * n + z] = lattice_.join(left_[x * n + z], y);
        right_[z * n + y] = lattice_.join(right_[z * n + y], x);
      }
    }
}

std::optional<LawViolation> find_quantale_violation(const FiniteLattice& L,
                                                    std::span<const Elem> mult) {
  const Elem n = static_cast<Elem>(L.size());
  if (mult.size() != std::size_t{n} * n)
    return LawViolation{ErrorKind::InvalidInput, "multiplication table has wrong shape", {}};
  for (Elem v : mult)
    if (v >= n) return LawViolation{ErrorKind::InvalidInput, "table entry out of range", {v}};
  auto m = [&](Elem x, Elem y) { return mult[x * n + y]; };

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (m(m(x, y), z) != m(x, m(y, z)))
          return LawViolation{ErrorKind::NotAssociative, "(x*y)*z = x*(y*z)", {x, y, z}};
  for (Elem x = 0; x < n; ++x)
    if (m(x, L.bot()) != L.bot() || m(L.bot(), x) != L.bot())
      return LawViolation{ErrorKind::BottomNotAbsorbed, "x*bot = bot*x = bot", {x}};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (m(x, L.join(y, z)) != L.join(m(x, y), m(x, z)))
          return LawViolation{ErrorKind::NotDistributive, "left: x*(y v z) = x*y v x*z", {x, y, z}};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (m(L.join(y, z), x) != L.join(m(y, x), m(z, x)))
          return LawViolation{ErrorKind::NotDistributive, "right: (y v z)*x = y*x v z*x", {x, y, z}};
  return std::nullopt;
}

Quantale check_quantale(FiniteLattice lattice, std::vector<Elem> mult) {
  if (auto v = find_quantale_violation(lattice, mult))
    throw Error(v->kind, v->law, v->witness);
  return Quantale(std::move(lattice), std::move(mult));
}

// ---------------------------------------------------------------------------

ElementFlags element_flags(const Quantale& Q, Elem zero) {
  ElementFlags f{true, true, true};
  for (Elem x = 0; x < Q.size(); ++x) {
    const Elem a = Q.residual_right(zero, Q.residual_left(x, zero));  // 0/(x\0)
    const Elem b = Q.residual_left(Q.residual_right(zero, x), zero);  // (0/x)\0
    f.dualizing = f.dualizing && a == x && b == x;
    f.weakly_cyclic = f.weakly_cyclic && a == b;
    f.cyclic = f.cyclic && Q.residual_left(x, zero) == Q.residual_right(zero, x);
  }
  return f;
}

UnitReport find_unit(const Quantale& Q) {
  UnitReport rep;
  const Elem n = static_cast<Elem>(Q.size());
  for (Elem u = 0; u < n && !rep.unit; ++u) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = Q.mult(u, x) == x && Q.mult(x, u) == x;
    if (ok) rep.unit = u;
  }
  Elem c = Q.top();
  for (Elem x = 0; x < n; ++x)
    c = Q.meet(c, Q.meet(Q.residual_left(x, x), Q.residual_right(x, x)));
  rep.candidate = c;
  rep.right_contractive = rep.left_contractive = true;
  for (Elem x = 0; x < n; ++x) {
    rep.right_contractive = rep.right_contractive && Q.leq(Q.mult(x, c), x);
    rep.left_contractive = rep.left_contractive && Q.leq(Q.mult(c, x), x);
  }
  return rep;
}

bool is_positive_element(const Quantale& Q, Elem p) {
  for (Elem x = 0; x < Q.size(); ++x)
    if (!Q.leq(x, Q.meet(Q.mult(x, p), Q.mult(p, x)))) return false;
  return true;
}

bool is_positive_quantale(const Quantale& Q) {
  for (Elem x = 0; x < Q.size(); ++x)
    if (!is_positive_element(Q, Q.residual_left(x, x)) ||
        !is_positive_element(Q, Q.residual_right(x, x)))
      return false;
  return true;
}

// ---------------------------------------------------------------------------

SerrePairReport check_frobenius(const Quantale& Q, const Map& l, const Map& r) {
  const Elem n = static_cast<Elem>(Q.size());
  if (l.size() != n || r.size() != n)
    throw Error(ErrorKind::InvalidInput, "negation maps have wrong arity");
  SerrePairReport rep;
  auto fail = [&rep](bool& flag, const char* name, std::vector<Elem> w) {
    if (flag) rep.witnesses.emplace(name, std::move(w));
    flag = false;
  };

  for (Elem x = 0; x < n; ++x) {
    if (l(r(x)) != x || r(l(x)) != x) fail(rep.is_inverse_pair, "is_inverse_pair", {x});
    if (l(r(x)) != r(l(x))) fail(rep.commutes, "commutes", {x});
    for (Elem y = 0; y < n; ++y) {
      if (Q.leq(x, y) && (!Q.leq(l(y), l(x)) || !Q.leq(r(y), r(x))))
        fail(rep.antitone, "antitone", {x, y});
      if (Q.residual_left(x, l(y)) != Q.residual_right(r(x), y))
        fail(rep.serre_identity, "serre_identity", {x, y});
      if (Q.residual_left(x, y) != Q.residual_right(r(x), r(y)) ||
          Q.residual_right(x, y) != Q.residual_left(l(x), l(y)) ||
          Q.residual_left(l(x), y) != Q.residual_right(x, r(y)))
        fail(rep.serre_identities, "serre_identities", {x, y});
      if (Q.leq(y, l(x)) != Q.leq(x, r(y))) fail(rep.is_galois, "is_galois", {x, y});
      if (!rep.shift_holds) continue;
      for (Elem z = 0; z < n; ++z)
        if (Q.leq(Q.mult(x, z), l(y)) != Q.leq(Q.mult(z, y), r(x))) {
          fail(rep.shift_holds, "shift_holds", {x, y, z});
          break;
        }
    }
  }

  std::vector<bool> in_l(n, false), in_r(n, false);
  for (Elem x = 0; x < n; ++x) in_l[l(x)] = in_r[r(x)] = true;
  for (Elem x = 0; x < n; ++x)
    if (in_l[x] != in_r[x]) {
      fail(rep.images_coincide, "images_coincide", {x});
      break;
    }
  return rep;
}

FrobeniusStructure validate_frobenius(const Quantale& Q, Map lneg, Map rneg) {
  const SerrePairReport rep = check_frobenius(Q, lneg, rneg);
  if (!rep.is_frobenius()) {
    std::string which = !rep.antitone ? "antitone" : !rep.is_inverse_pair ? "is_inverse_pair"
                                                                           : "serre_identity";
    throw Error(ErrorKind::ValidationFailed, "not a Frobenius structure: " + which,
                rep.witnesses.at(which));
  }
  return FrobeniusStructure{std::move(lneg), std::move(rneg)};
}

FrobeniusStructure frobenius_from_dualizing(const Quantale& Q, Elem zero) {
  if (!element_flags(Q, zero).dualizing)
    throw Error(ErrorKind::NotDualizing, "element is not dualizing", {zero});
  Map l, r;
  l.image.resize(Q.size());
  r.image.resize(Q.size());
  for (Elem x = 0; x < Q.size(); ++x) {
    l.image[x] = Q.residual_right(zero, x);
    r.image[x] = Q.residual_left(x, zero);
  }
  return validate_frobenius(Q, std::move(l), std::move(r));
}

Elem dual_mult(const Quantale& Q, const FrobeniusStructure& F, Elem x, Elem y) {
  const Map& l = F.lneg;
  const Map& r = F.rneg;
  const Elem a = l(Q.mult(r(y), r(x)));
  const Elem b = r(Q.mult(l(y), l(x)));
  const Elem c = Q.residual_left(l(x), y);
  const Elem d = Q.residual_right(x, r(y));
  if (a != b || a != c || a != d)
    throw Error(ErrorKind::CoincidenceFailed, "dual multiplications disagree", {x, y});
  return a;
}

bool is_duality(const FiniteLattice& L, const Map& l, const Map& r) {
  const Elem n = static_cast<Elem>(L.size());
  if (l.size() != n || r.size() != n) return false;
  for (Elem x = 0; x < n; ++x) {
    if (l(x) >= n || r(x) >= n || l(r(x)) != x || r(l(x)) != x) return false;
    for (Elem y = 0; y < n; ++y)
      if (L.leq(x, y) && (!L.leq(l(y), l(x)) || !L.leq(r(y), r(x)))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

TrivialQuantale trivial_quantale(const FiniteLattice& L,
                                 std::optional<std::pair<Map, Map>> duality) {
  std::vector<Elem> mult(L.size() * L.size(), L.bot());
  TrivialQuantale out{check_quantale(L, std::move(mult)), std::nullopt};
  if (duality) {
    auto& [l, r] = *duality;
    if (!is_duality(L, l, r))
      throw Error(ErrorKind::NotADuality, "maps are not inverse antitone bijections");
    out.frobenius = validate_frobenius(out.quantale, std::move(l), std::move(r));
  }
  return out;
}

ChuQuantale chu(const Quantale& Q) {
  const ChuView view(Q);
  const std::size_t N = view.size();
  std::vector<Elem> mult(N * N);
  Map neg;
  neg.image.resize(N);
  for (Elem x = 0; x < N; ++x) {
    neg.image[x] = view.negation(x);
    for (Elem y = 0; y < N; ++y) mult[x * N + y] = view.mult(x, y);
  }
  Quantale C = check_quantale(product(Q.lattice(), dual(Q.lattice())), std::move(mult));
  FrobeniusStructure F = validate_frobenius(C, neg, neg);
  return ChuQuantale{std::move(C), std::move(F)};
}

// ---------------------------------------------------------------------------

bool is_quantale_isomorphism(const Quantale& Q1, const Quantale& Q2, const Map& phi,
                             const FrobeniusStructure* F1, const FrobeniusStructure* F2) {
  const Elem n = static_cast<Elem>(Q1.size());
  if (Q2.size() != n || phi.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Elem x = 0; x < n; ++x) {
    if (phi(x) >= n || hit[phi(x)]) return false;
    hit[phi(x)] = true;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (Q1.leq(x, y) != Q2.leq(phi(x), phi(y))) return false;
      if (phi(Q1.mult(x, y)) != Q2.mult(phi(x), phi(y))) return false;
    }
  if (F1 && F2)
    for (Elem x = 0; x < n; ++x)
      if (phi(F1->lneg(x)) != F2->lneg(phi(x)) || phi(F1->rneg(x)) != F2->rneg(phi(x)))
        return false;
  return true;
}

std::optional<Map> find_quantale_isomorphism(const Quantale& Q1, const Quantale& Q2) {
  if (Q1.size() != Q2.size()) return std::nullopt;
  if (Q1.size() > 12)
    throw Error(ErrorKind::BudgetExceeded, "isomorphism search limited to 12 elements");
  Map phi = Map::identity(Q1.size());
  do {
    if (is_quantale_isomorphism(Q1, Q2, phi)) return phi;
  } while (std::next_permutation(phi.image.begin(), phi.image.end()));
  return std::nullopt;
}

}  // namespace qlab
