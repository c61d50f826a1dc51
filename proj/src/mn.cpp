#include "qlab/mn.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qlab {

namespace {

bool is_atom(std::size_t n, Elem x) { return x >= 1 && x <= n; }

std::vector<Elem> image_of(const Map& f) {
  std::vector<Elem> img = f.image;
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

}  // namespace

TightProfile tight_profile_mn(std::size_t n, const Map& f) {
  const FiniteLattice L = diamond(n);
  if (!is_sup_preserving(L, f))
    throw Error(ErrorKind::NotSupPreserving, "profile needs a sup-preserving map");
  TightProfile p;
  p.tight = is_tight(L, f);
  const std::vector<Elem> img = image_of(f);
  p.image_distributive = is_distributive(induced_lattice(L, img));
  p.atoms_in_image = static_cast<std::size_t>(
      std::count_if(img.begin(), img.end(), [n](Elem x) { return is_atom(n, x); }));
  if (p.tight != p.image_distributive || p.tight != (p.atoms_in_image <= 2))
    throw Error(ErrorKind::ValidationFailed, "tightness characterizations disagree", f.image);
  return p;
}

std::vector<Map> enumerate_sup_endomaps_mn(std::size_t n, const Budget& budget) {
  const FiniteLattice L = diamond(n);
  if (n < 2) return enumerate_sup_endomaps(L, budget);
  const std::size_t m = n + 2;
  if (std::pow(double(m), double(n)) > static_cast<double>(budget.max_candidates))
    throw Error(ErrorKind::BudgetExceeded, "atom-image search space exceeds the candidate budget");
  const Elem top = L.top();

  std::vector<Map> out;
  std::vector<Elem> atoms(n, 0);
  while (true) {
    const Elem t = L.join(atoms[0], atoms[1]);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = L.join(atoms[i], atoms[j]) == t;
    if (ok) {
      Map f;
      f.image.resize(m);
      f[L.bot()] = L.bot();
      for (std::size_t i = 0; i < n; ++i) f[Elem(i + 1)] = atoms[i];
      f[top] = t;
      out.push_back(std::move(f));
    }
    std::size_t pos = 0;
    while (pos < n && ++atoms[pos] == m) atoms[pos++] = 0;
    if (pos == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t tight_count_formula(std::size_t n) {
  const std::uint64_t k = n;
  return (k * k * k * k - 2 * k * k * k + 5 * k * k + 4 * k + 4) / 2;
}

Map c_join_a(const FiniteLattice& L, Elem y, Elem x) {
  return pointwise_join(L, c_map(L, y), a_map(L, x));
}

Map f_gen(std::size_t n, Elem x1, Elem y1, Elem x2, Elem y2) {
  if (x1 == x2 || y1 == y2 || !is_atom(n, x1) || !is_atom(n, x2) || !is_atom(n, y1) ||
      !is_atom(n, y2))
    throw Error(ErrorKind::NotDistinctAtoms, "f_gen needs atoms with x1 != x2 and y1 != y2",
                {x1, y1, x2, y2});
  const FiniteLattice L = diamond(n);
  Map f = Map::constant(L.size(), L.top());
  f[L.bot()] = L.bot();
  f[x1] = y1;
  f[x2] = y2;
  const Map g = pointwise_join(L, compose(c_map(L, y2), a_map(L, x1)),
                               compose(c_map(L, y1), a_map(L, x2)));
  if (f != g) throw Error(ErrorKind::ValidationFailed, "f_gen differs from its generator join");
  return f;
}

MnTightReport count_tight_mn(std::size_t n, bool enumerate, const Budget& budget) {
  MnTightReport rep;
  rep.n = n;
  rep.formula_value = tight_count_formula(n);
  if (!enumerate) return rep;

  const FiniteLattice L = diamond(n);
  const std::vector<Map> sup = enumerate_sup_endomaps_mn(n, budget);
  if (sup_endomap_search_space(L) <= static_cast<double>(budget.max_candidates) &&
      sup != enumerate_sup_endomaps(L, budget))
    throw Error(ErrorKind::ValidationFailed, "atom-image enumeration disagrees with the generic one");

  std::map<Map, std::string> classes;
  auto tag = [&](const Map& f, const char* name) { classes.emplace(f, name); };
  tag(Map::constant(L.size(), L.bot()), "constants");
  tag(c_map(L, L.top()), "constants");
  for (Elem a = 1; a <= n; ++a) {
    tag(c_map(L, a), "c_or_a");
    tag(a_map(L, a), "c_or_a");
  }
  for (Elem y = 1; y <= n; ++y)
    for (Elem x = 1; x <= n; ++x) {
      tag(compose(c_map(L, y), a_map(L, x)), "c_comp_a");
      tag(c_join_a(L, y, x), "c_join_a");
    }
  for (Elem x1 = 1; x1 <= n; ++x1)
    for (Elem x2 = x1 + 1; x2 <= n; ++x2)
      for (Elem y1 = 1; y1 <= n; ++y1)
        for (Elem y2 = 1; y2 <= n; ++y2)
          if (y1 != y2) tag(f_gen(n, x1, y1, x2, y2), "f_gen");

  for (const char* k : {"constants", "c_or_a", "c_comp_a", "c_join_a", "f_gen", "other"})
    rep.by_class[k] = 0;
  std::uint64_t counted = 0;
  for (const Map& f : sup) {
    if (!is_tight(L, f)) continue;
    ++counted;
    const auto it = classes.find(f);
    ++rep.by_class[it == classes.end() ? "other" : it->second];
  }
  rep.counted = counted;
  if (!rep.consistent())
    throw Error(ErrorKind::ValidationFailed, "tight count differs from the closed form");
  return rep;
}

FormulaCheck check_negation_formulas(std::size_t n) {
  const FiniteLattice L = diamond(n);
  const Elem m = static_cast<Elem>(L.size());
  FormulaCheck out;
  for (Elem y = 0; y < m; ++y)
    for (Elem x = 0; x < m; ++x) {
      ++out.checked;
      if (star(L, compose(c_map(L, y), a_map(L, x))) != c_join_a(L, x, y)) {
        out.ok = false;
        out.witnesses.push_back({y, x});
      }
    }
  for (Elem x1 = 1; x1 <= n; ++x1)
    for (Elem x2 = 1; x2 <= n; ++x2)
      for (Elem y1 = 1; y1 <= n; ++y1)
        for (Elem y2 = 1; y2 <= n; ++y2) {
          if (x1 == x2 || y1 == y2) continue;
          ++out.checked;
          if (star(L, f_gen(n, x1, y1, x2, y2)) != f_gen(n, y1, x2, y2, x1)) {
            out.ok = false;
            out.witnesses.push_back({x1, y1, x2, y2});
          }
        }
  return out;
}

PentagonDiamondReport pentagon_diamond_check(const FiniteLattice& L) {
  PentagonDiamondReport rep;
  const std::vector<Map> sup = enumerate_sup_endomaps(L);
  const std::vector<Map> isos = order_automorphisms(L);
  const std::set<Map> iso_set(isos.begin(), isos.end());
  rep.sup_count = sup.size();
  rep.iso_count = isos.size();
  rep.identity_holds = true;
  for (const Map& f : sup) {
    const bool tight = is_tight(L, f);
    rep.tight_count += tight;
    if (tight == iso_set.contains(f)) {
      rep.identity_holds = false;
      if (!rep.witness) rep.witness = f;
    }
  }
  return rep;
}

PositivityReport positivity_suite_mn(std::size_t n) {
  const FiniteLattice L = diamond(n);
  const TightQuantale tq = tight_quantale_from(L, enumerate_sup_endomaps_mn(n));
  const Quantale& Q = tq.quantale;
  const Map id = Map::identity(L.size());
  PositivityReport rep;
  for (Elem f = 0; f < Q.size(); ++f) {
    ++rep.checked;
    const Elem l = Q.residual_left(f, f), r = Q.residual_right(f, f);
    if (!is_positive_element(Q, l) || !is_positive_element(Q, r) ||
        !pointwise_leq(L, id, tq.element(l))) {
      rep.ok = false;
      rep.witnesses.push_back(f);
    }
  }
  rep.bottom_positive = is_positive_element(Q, Q.bot());
  return rep;
}

ClosureSublatticeReport closures_vs_sublattices(std::size_t n) {
  const FiniteLattice L = diamond(n);
  const Elem m = static_cast<Elem>(L.size());
  const std::vector<Map> sup = enumerate_sup_endomaps_mn(n);
  const Map id = Map::identity(m);
  ClosureSublatticeReport rep;

  // Idempotent positive elements of (Hom_∨, ∘); positivity reduces to f >= id.
  std::vector<Map> closures;
  std::vector<ElemSet> fixed_sets;
  bool consistent = true;
  for (const Map& f : sup) {
    if (compose(f, f) != f || !pointwise_leq(L, id, f)) continue;
    consistent = consistent && is_closure_operator(L, f);
    closures.push_back(f);
    ElemSet fix(m);
    for (Elem x = 0; x < m; ++x)
      if (f(x) == x) fix.set(x);
    fixed_sets.push_back(fix);
  }
  rep.closure_count = closures.size();

  std::set<ElemSet> sublattices;
  const Elem inner = m - 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner); ++mask) {
    ElemSet s(m);
    s.set(L.bot());
    s.set(L.top());
    for (Elem i = 0; i < inner; ++i)
      if (mask >> i & 1) s.set(i + 1);
    bool closed = true;
    for (auto a = s.find_first(); a != ElemSet::npos && closed; a = s.find_next(a))
      for (auto b = s.find_first(); b != ElemSet::npos && closed; b = s.find_next(b))
        closed = s.test(L.join(Elem(a), Elem(b))) && s.test(L.meet(Elem(a), Elem(b)));
    if (closed) sublattices.insert(s);
  }
  rep.sublattice_count = sublattices.size();
  const std::set<ElemSet> fixed_unique(fixed_sets.begin(), fixed_sets.end());
  rep.bijection = consistent && fixed_unique.size() == closures.size() && fixed_unique == sublattices;

  rep.tight_iff_distributive = true;
  std::vector<Map> tight_closures;
  for (std::size_t i = 0; i < closures.size(); ++i) {
    std::vector<Elem> fix;
    for (auto x = fixed_sets[i].find_first(); x != ElemSet::npos; x = fixed_sets[i].find_next(x))
      fix.push_back(Elem(x));
    const bool tight = is_tight(L, closures[i]);
    rep.tight_iff_distributive =
        rep.tight_iff_distributive && tight == is_distributive(induced_lattice(L, fix));
    if (tight) tight_closures.push_back(closures[i]);
  }
  rep.tight_closure_count = tight_closures.size();

  // Meet in Hom_∨: the greatest sup-preserving map below both.
  auto hom_meet = [&](const Map& a, const Map& b) -> std::optional<Map> {
    std::vector<const Map*> below;
    for (const Map& h : sup)
      if (pointwise_leq(L, h, a) && pointwise_leq(L, h, b)) below.push_back(&h);
    for (const Map* h : below)
      if (std::all_of(below.begin(), below.end(),
                      [&](const Map* g) { return pointwise_leq(L, *g, *h); }))
        return *h;
    return std::nullopt;
  };
  for (std::size_t i = 0; i < tight_closures.size() && !rep.collapsing_pair; ++i)
    for (std::size_t j = i + 1; j < tight_closures.size(); ++j) {
      const Map& a = tight_closures[i];
      const Map& b = tight_closures[j];
      if (a == id || b == id || hom_meet(a, b) != id) continue;
      rep.collapsing_pair = std::make_pair(a, b);
      rep.hom_meet_is_identity = true;
      const Map tight_meet = tight_interior(L, pointwise_meet(L, a, b));
      rep.tight_meet_is_bottom = tight_meet == Map::constant(m, L.bot()) &&
                                 tight_meet == tight_interior(L, id);
      break;
    }
  return rep;
}

}  // namespace qlab
