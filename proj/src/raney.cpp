#include "qlab/raney.hpp"

#include <algorithm>

namespace qlab {

Map raney_sup(const FiniteLattice& L, const Map& f) {
  const Elem n = static_cast<Elem>(L.size());
  Map g;
  g.image.resize(n);
  for (Elem x = 0; x < n; ++x) {
    Elem acc = L.bot();
    for (Elem t = 0; t < n; ++t)
      if (!L.leq(x, t)) acc = L.join(acc, f(t));
    g.image[x] = acc;
  }
  return g;
}

Map raney_inf(const FiniteLattice& L, const Map& f) {
  const Elem n = static_cast<Elem>(L.size());
  Map g;
  g.image.resize(n);
  for (Elem x = 0; x < n; ++x) {
    Elem acc = L.top();
    for (Elem t = 0; t < n; ++t)
      if (!L.leq(t, x)) acc = L.meet(acc, f(t));
    g.image[x] = acc;
  }
  return g;
}

Map raney_sup_right_adjoint(const FiniteLattice& L, const Map& f) {
  const Elem n = static_cast<Elem>(L.size());
  Map g;
  g.image.resize(n);
  for (Elem y = 0; y < n; ++y) {
    Elem acc = L.top();
    for (Elem t = 0; t < n; ++t)
      if (!L.leq(f(t), y)) acc = L.meet(acc, t);
    g.image[y] = acc;
  }
  return g;
}

Map tight_interior(const FiniteLattice& L, const Map& f) {
  return raney_sup(L, raney_inf(L, f));
}

Map cotight_closure(const FiniteLattice& L, const Map& f) {
  return raney_inf(L, raney_sup(L, f));
}

bool is_tight(const FiniteLattice& L, const Map& f) { return tight_interior(L, f) == f; }

bool is_cotight(const FiniteLattice& L, const Map& f) { return cotight_closure(L, f) == f; }

Map star(const FiniteLattice& L, const Map& f) { return raney_sup(L, right_adjoint(L, f)); }

Map c_map(const FiniteLattice& L, Elem y) {
  Map c = Map::constant(L.size(), y);
  c[L.bot()] = L.bot();
  return c;
}

Map a_map(const FiniteLattice& L, Elem x) {
  Map a;
  a.image.resize(L.size());
  for (Elem t = 0; t < L.size(); ++t) a[t] = L.leq(t, x) ? L.bot() : L.top();
  return a;
}

Map meet_closure(const FiniteLattice& L, const Map& f) {
  if (!is_monotone(L, f)) throw Error(ErrorKind::NotMonotone, "meet closure needs a monotone map");
  const Elem n = static_cast<Elem>(L.size());
  Map g = f;
  bool changed = true;
  while (changed) {
    changed = false;
    auto raise = [&](Elem z, Elem v) {
      const Elem w = L.join(g(z), v);
      if (w != g(z)) {
        g[z] = w;
        changed = true;
      }
    };
    raise(L.top(), L.top());
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        raise(L.meet(x, y), L.meet(g(x), g(y)));
        if (L.leq(x, y)) raise(y, g(x));
      }
  }
  if (!is_meet_preserving(L, g))
    throw Error(ErrorKind::ValidationFailed, "meet closure did not converge to a meet-preserving map");
  return g;
}

std::vector<std::pair<Elem, Elem>> decompose_tight(const FiniteLattice& L, const Map& f) {
  if (!is_tight(L, f)) throw Error(ErrorKind::NotTight, "decomposition needs a tight map");
  const Map g = raney_inf(L, f);
  std::vector<std::pair<Elem, Elem>> pairs;
  Map acc = Map::constant(L.size(), L.bot());
  for (Elem t = 0; t < L.size(); ++t) {
    pairs.emplace_back(g(t), t);
    acc = pointwise_join(L, acc, compose(c_map(L, g(t)), a_map(L, t)));
  }
  if (acc != f) throw Error(ErrorKind::ValidationFailed, "generator join does not reproduce f");
  return pairs;
}

Map elementary_tensor(const FiniteLattice& L, Elem y, Elem x) {
  Map e;
  e.image.resize(L.size());
  for (Elem t = 0; t < L.size(); ++t) {
    if (t == L.top())
      e[t] = L.top();
    else
      e[t] = L.leq(x, t) ? y : L.bot();
  }
  return e;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<Elem> find_sorted(const std::vector<Map>& xs, const Map& f) {
  const auto it = std::lower_bound(xs.begin(), xs.end(), f);
  if (it == xs.end() || *it != f) return std::nullopt;
  return static_cast<Elem>(it - xs.begin());
}

/// Pointwise order on a list of maps.
FiniteLattice pointwise_lattice(const FiniteLattice& L, const std::vector<Map>& maps) {
  const std::size_t k = maps.size();
  std::vector<std::uint8_t> leq(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) leq[a * k + b] = pointwise_leq(L, maps[a], maps[b]);
  return FiniteLattice::from_order(k, std::move(leq));
}

}  // namespace

std::optional<Elem> TightQuantale::index_of(const Map& f) const { return find_sorted(elements, f); }

TightQuantale tight_quantale_from(const FiniteLattice& L, const std::vector<Map>& sup_maps) {
  std::vector<Map> tight;
  for (const Map& f : sup_maps)
    if (is_tight(L, f)) tight.push_back(f);
  std::sort(tight.begin(), tight.end());
  tight.erase(std::unique(tight.begin(), tight.end()), tight.end());
  const std::size_t k = tight.size();

  auto index = [&](const Map& f, const char* what) {
    auto i = find_sorted(tight, f);
    if (!i) throw Error(ErrorKind::ValidationFailed, std::string("tight maps not closed under ") + what);
    return *i;
  };
  FiniteLattice order = pointwise_lattice(L, tight);
  std::vector<Elem> mult(k * k);
  Map st;
  st.image.resize(k);
  for (Elem a = 0; a < k; ++a) {
    st[a] = index(star(L, tight[a]), "star");
    for (Elem b = 0; b < k; ++b) {
      if (order.join(a, b) != index(pointwise_join(L, tight[a], tight[b]), "joins"))
        throw Error(ErrorKind::ValidationFailed, "joins of tight maps are not pointwise", {a, b});
      mult[a * k + b] = index(compose(tight[a], tight[b]), "composition");
    }
  }
  Quantale Q = check_quantale(std::move(order), std::move(mult));
  const SerrePairReport rep = check_frobenius(Q, st, st);
  if (!rep.is_frobenius() || !rep.shift_holds)
    throw Error(ErrorKind::ValidationFailed, "star is not a Girard negation");

  std::vector<Map> rho(k);
  for (Elem a = 0; a < k; ++a) rho[a] = right_adjoint(L, tight[a]);
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b)
      if (tight[Q.residual_left(a, b)] != tight_interior(L, compose(rho[a], tight[b])))
        throw Error(ErrorKind::ValidationFailed, "residual differs from rand(rho(f) o g)", {a, b});

  FrobeniusStructure F{st, st};
  return TightQuantale{L, std::move(tight), std::move(Q), std::move(F)};
}

TightQuantale tight_quantale(const FiniteLattice& L, const Budget& budget) {
  return tight_quantale_from(L, enumerate_sup_endomaps(L, budget));
}

// ---------------------------------------------------------------------------

BulletReport bullet_quantale(const FiniteLattice& L, const Budget& budget) {
  BulletReport rep;
  // Meet-preserving endomaps of L are the sup-preserving endomaps of its dual.
  rep.meet_maps = enumerate_sup_endomaps(dual(L), budget);
  const std::vector<Map>& hom = rep.meet_maps;
  const std::size_t k = hom.size();
  auto index = [&](const Map& f) {
    auto i = find_sorted(hom, f);
    if (!i) throw Error(ErrorKind::ValidationFailed, "map is not meet-preserving");
    return *i;
  };

  std::vector<Map> rans(k);
  for (Elem a = 0; a < k; ++a) rans[a] = raney_sup(L, hom[a]);
  std::vector<Elem> mult(k * k);
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) mult[a * k + b] = index(meet_closure(L, compose(rans[a], hom[b])));
  rep.quantale.emplace(check_quantale(pointwise_lattice(L, hom), std::move(mult)));
  const Quantale& Q = *rep.quantale;

  rep.perp.image.resize(k);
  for (Elem a = 0; a < k; ++a) rep.perp[a] = index(raney_inf(L, left_adjoint(L, hom[a])));
  const SerrePairReport gc = check_frobenius(Q, rep.perp, rep.perp);
  rep.perp_is_serre_gc = gc.is_serre_gc();
  rep.perp_self_adjoint = gc.is_galois;
  if (!rep.perp_is_serre_gc) return rep;

  const SerreQuotient sq = serre_gc_quotient(Q, rep.perp, rep.perp);
  const QuotientQuantale& Qj = sq.quotient;
  rep.cotight_count = Qj.closed.size();
  rep.nucleus_is_cotight_closure = true;
  for (Elem a = 0; a < k; ++a)
    rep.nucleus_is_cotight_closure =
        rep.nucleus_is_cotight_closure && hom[Qj.nucleus(a)] == cotight_closure(L, hom[a]);

  rep.quotient_mult_formula = true;
  for (Elem a = 0; a < Qj.closed.size(); ++a)
    for (Elem b = 0; b < Qj.closed.size(); ++b) {
      const Map expect = raney_inf(L, compose(rans[Qj.closed[a]], rans[Qj.closed[b]]));
      rep.quotient_mult_formula =
          rep.quotient_mult_formula && hom[Qj.embed(Qj.quantale.mult(a, b))] == expect;
    }

  const TightQuantale tq = tight_quantale(L, budget);
  rep.iso.image.resize(Qj.closed.size());
  bool onto_tight = Qj.closed.size() == tq.elements.size();
  for (Elem a = 0; a < Qj.closed.size() && onto_tight; ++a) {
    const auto i = tq.index_of(rans[Qj.closed[a]]);
    onto_tight = i.has_value();
    if (i) rep.iso[a] = *i;
  }
  if (onto_tight) {
    rep.rans_is_isomorphism = is_quantale_isomorphism(Qj.quantale, tq.quantale, rep.iso);
    rep.perp_to_star = is_quantale_isomorphism(Qj.quantale, tq.quantale, rep.iso, &sq.frobenius,
                                               &tq.frobenius);
  }

  rep.elementary_tensor_law = true;
  const Elem n = static_cast<Elem>(L.size());
  const Elem bottom = index(elementary_tensor(L, L.bot(), L.top()));
  for (Elem v = 0; v < n && rep.elementary_tensor_law; ++v)
    for (Elem u = 0; u < n && rep.elementary_tensor_law; ++u)
      for (Elem y = 0; y < n && rep.elementary_tensor_law; ++y)
        for (Elem x = 0; x < n; ++x) {
          const Elem lhs =
              Q.mult(index(elementary_tensor(L, v, u)), index(elementary_tensor(L, y, x)));
          const Elem rhs = L.leq(y, u) ? bottom : index(elementary_tensor(L, v, x));
          if (lhs != rhs) {
            rep.elementary_tensor_law = false;
            rep.tensor_witness = {v, u, y, x};
            break;
          }
        }
  return rep;
}

}  // namespace qlab
