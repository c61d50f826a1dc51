#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qlab/raney.hpp"

using namespace qlab;

namespace {

// Raney transforms written out from the order relation alone.
Map rans_oracle(const FiniteLattice& L, const Map& f) {
  Map g;
  for (Elem x = 0; x < L.size(); ++x) {
    std::vector<Elem> vals;
    for (Elem t = 0; t < L.size(); ++t)
      if (!L.leq(x, t)) vals.push_back(f(t));
    g.image.push_back(oracle::lub(L, vals));
  }
  return g;
}

Map rani_oracle(const FiniteLattice& L, const Map& f) {
  Map g;
  for (Elem x = 0; x < L.size(); ++x) {
    std::vector<Elem> vals;
    for (Elem t = 0; t < L.size(); ++t)
      if (!L.leq(t, x)) vals.push_back(f(t));
    g.image.push_back(oracle::glb(L, vals));
  }
  return g;
}

bool leq_maps(const FiniteLattice& L, const Map& f, const Map& g) {
  for (Elem x = 0; x < L.size(); ++x)
    if (!L.leq(f(x), g(x))) return false;
  return true;
}

bool monotone(const FiniteLattice& L, const Map& f) {
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y)
      if (L.leq(x, y) && !L.leq(f(x), f(y))) return false;
  return true;
}

std::vector<Map> meet_maps_oracle(const FiniteLattice& L) {
  std::vector<Map> out;
  for (const Map& f : enumerate_endofunctions(L.size())) {
    bool ok = f(L.top()) == L.top();
    for (Elem x = 0; x < L.size() && ok; ++x)
      for (Elem y = 0; y < L.size() && ok; ++y)
        ok = f(oracle::glb(L, {x, y})) == oracle::glb(L, {f(x), f(y)});
    if (ok) out.push_back(f);
  }
  return out;
}

Map lub_of_maps(const FiniteLattice& L, const std::vector<Map>& fs) {
  Map g;
  for (Elem x = 0; x < L.size(); ++x) {
    std::vector<Elem> vals;
    for (const Map& f : fs) vals.push_back(f(x));
    g.image.push_back(oracle::lub(L, vals));
  }
  return g;
}

}  // namespace

TEST_CASE("Raney transforms match the order-only oracle and form an adjunction") {
  for (const FiniteLattice& L : oracle::small_lattices()) {
    const std::vector<Map> all = enumerate_endofunctions(L.size());
    std::vector<Map> pool;
    if (L.size() <= 4) {
      pool = all;
    } else {
      for (const Map& f : all)
        if (monotone(L, f)) pool.push_back(f);
    }
    for (const Map& f : all) {
      CHECK(raney_sup(L, f) == rans_oracle(L, f));
      CHECK(raney_inf(L, f) == rani_oracle(L, f));
    }
    for (const Map& f : pool) {
      const Map sf = raney_sup(L, f);
      for (const Map& g : pool) CHECK(leq_maps(L, sf, g) == leq_maps(L, f, raney_inf(L, g)));
    }
  }
}

TEST_CASE("Raney transforms on random lattices") {
  std::mt19937 rng(20261018);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 6 + i % 2;
    const FiniteLattice L = oracle::random_lattice(n, rng);
    const Map f = oracle::random_map(n, rng), g = oracle::random_map(n, rng);
    const Map sf = raney_sup(L, f);
    REQUIRE(sf == rans_oracle(L, f));
    REQUIRE(raney_inf(L, g) == rani_oracle(L, g));
    REQUIRE(leq_maps(L, sf, g) == leq_maps(L, f, raney_inf(L, g)));
    if (i % 10 == 0) {
      REQUIRE(oracle::preserves_all_joins(L, sf));
      REQUIRE(is_meet_preserving(L, raney_inf(L, f)));
    }
  }
}

TEST_CASE("rans is sup-preserving with the stated right adjoint") {
  for (const FiniteLattice& L : oracle::small_lattices()) {
    if (L.size() > 4) continue;
    for (const Map& f : enumerate_endofunctions(L.size())) {
      const Map sf = raney_sup(L, f);
      CHECK(oracle::preserves_all_joins(L, sf));
      CHECK(is_meet_preserving(L, raney_inf(L, f)));
      const Map g = raney_sup_right_adjoint(L, f);
      CHECK(g == right_adjoint(L, sf));
      for (Elem x = 0; x < L.size(); ++x)
        for (Elem y = 0; y < L.size(); ++y) CHECK(L.leq(sf(x), y) == L.leq(x, g(y)));
    }
  }
}

TEST_CASE("rans commutes with postcomposition by sup-preserving maps") {
  for (const FiniteLattice& L : oracle::small_lattices()) {
    const std::vector<Map> sups = oracle::sup_endomaps(L);
    const std::vector<Map> all = enumerate_endofunctions(L.size());
    for (std::size_t i = 0; i < all.size(); i += 7)
      for (const Map& f : sups)
        CHECK(raney_sup(L, compose(f, all[i])) == compose(f, raney_sup(L, all[i])));
  }
}

TEST_CASE("tight maps are the joins of the maps c_y a_x") {
  for (const FiniteLattice& L : oracle::small_lattices()) {
    const std::vector<Map> gens = oracle::tight_by_generators(L);
    std::vector<Map> tight;
    for (const Map& f : oracle::sup_endomaps(L))
      if (is_tight(L, f)) tight.push_back(f);
    CHECK(tight == gens);
    CHECK(tight_quantale(L).elements == gens);
    for (Elem y = 0; y < L.size(); ++y)
      for (Elem x = 0; x < L.size(); ++x) {
        const Map ca = compose(c_map(L, y), a_map(L, x));
        CHECK(std::binary_search(gens.begin(), gens.end(), ca));
        for (Elem t = 0; t < L.size(); ++t) CHECK(ca(t) == (L.leq(t, x) ? L.bot() : y));
      }
  }
}

TEST_CASE("tight interior and cotight closure are extremal") {
  for (const FiniteLattice& L : oracle::small_lattices()) {
    const std::vector<Map> sups = oracle::sup_endomaps(L);
    std::vector<Map> tight, cotight;
    for (const Map& f : sups)
      if (is_tight(L, f)) tight.push_back(f);
    const std::vector<Map> meets = meet_maps_oracle(L);
    for (const Map& f : meets)
      if (is_cotight(L, f)) cotight.push_back(f);
    CHECK(tight.size() == cotight.size());

    for (const Map& f : enumerate_endofunctions(L.size())) {
      if (!monotone(L, f)) continue;
      std::vector<Map> below;
      for (const Map& t : tight)
        if (leq_maps(L, t, f)) below.push_back(t);
      const Map ti = tight_interior(L, f);
      CHECK(ti == lub_of_maps(L, below));
      CHECK(std::binary_search(tight.begin(), tight.end(), ti));

      const Map cc = cotight_closure(L, f);
      CHECK(std::find(cotight.begin(), cotight.end(), cc) != cotight.end());
      for (const Map& c : cotight)
        if (leq_maps(L, f, c)) CHECK(leq_maps(L, cc, c));

      const Map mc = meet_closure(L, f);
      CHECK(leq_maps(L, f, mc));
      for (const Map& m : meets)
        if (leq_maps(L, f, m)) CHECK(leq_maps(L, mc, m));
      CHECK(std::find(meets.begin(), meets.end(), mc) != meets.end());
    }
  }
}

TEST_CASE("meet_closure examples") {
  const FiniteLattice M = diamond(3);
  CHECK(meet_closure(M, Map::constant(5, 0)) == Map(std::vector<Elem>{0, 0, 0, 0, 4}));
  CHECK(meet_closure(M, Map::identity(5)) == Map::identity(5));
  // Already meet-preserving below top, so only top moves.
  CHECK(meet_closure(M, Map(std::vector<Elem>{0, 1, 0, 0, 1})) ==
        Map(std::vector<Elem>{0, 1, 0, 0, 4}));
  // a and c both go to a, so bot rises to a, and then b has to go above
  // both a and c.
  CHECK(meet_closure(M, Map(std::vector<Elem>{0, 1, 3, 1, 4})) ==
        Map(std::vector<Elem>{1, 1, 4, 1, 4}));
  try {
    meet_closure(M, Map(std::vector<Elem>{4, 0, 0, 0, 0}));
    FAIL("expected NotMonotone");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMonotone);
  }
}

TEST_CASE("star is an antitone involution on tight maps") {
  for (const FiniteLattice& L : oracle::small_lattices()) {
    const TightQuantale tq = tight_quantale(L);
    for (const Map& f : tq.elements) {
      const Map s = star(L, f);
      CHECK(is_tight(L, s));
      CHECK(star(L, s) == f);
      CHECK(s == raney_sup(L, right_adjoint(L, f)));
      for (const Map& g : tq.elements)
        if (leq_maps(L, f, g)) CHECK(leq_maps(L, star(L, g), s));
    }
  }
  CHECK_THROWS_AS(star(chain(3), Map(std::vector<Elem>{1, 1, 2})), Error);
}

TEST_CASE("decompose_tight on every tight map of M_3") {
  const FiniteLattice M = diamond(3);
  const TightQuantale tq = tight_quantale(M);
  REQUIRE(tq.elements.size() == 44);
  for (const Map& f : tq.elements) {
    const auto pairs = decompose_tight(M, f);
    CHECK(pairs.size() == M.size());
    std::vector<Map> parts{Map::constant(5, M.bot())};
    for (const auto& [y, x] : pairs) parts.push_back(compose(c_map(M, y), a_map(M, x)));
    CHECK(lub_of_maps(M, parts) == f);
  }
  try {
    decompose_tight(M, Map::identity(5));
    FAIL("expected NotTight");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTight);
  }
}

TEST_CASE("tight quantale examples") {
  const FiniteLattice N = pentagon();
  const TightQuantale tn = tight_quantale(N);
  std::vector<Map> expect = oracle::sup_endomaps(N);
  expect.erase(std::find(expect.begin(), expect.end(), Map::identity(5)));
  CHECK(tn.elements == expect);
  CHECK(tn.elements.size() == 42);

  CHECK(tight_quantale(diamond(3)).elements.size() == 44);
  CHECK(tight_quantale(chain(3)).elements.size() == 6);
  CHECK(tight_quantale(boolean_lattice(2)).elements.size() == 16);

  for (const FiniteLattice& L : oracle::small_lattices()) {
    const TightQuantale tq = tight_quantale(L);
    const Quantale& Q = tq.quantale;
    CHECK(check_frobenius(Q, tq.frobenius.lneg, tq.frobenius.rneg).is_frobenius());
    CHECK(tq.frobenius.is_girard());
    for (Elem i = 0; i < Q.size(); ++i) {
      CHECK(tq.element(tq.frobenius.lneg(i)) == star(L, tq.element(i)));
      for (Elem k = 0; k < Q.size(); ++k) {
        CHECK(tq.element(Q.mult(i, k)) == compose(tq.element(i), tq.element(k)));
        CHECK(tq.element(Q.join(i, k)) ==
              lub_of_maps(L, {tq.element(i), tq.element(k)}));
        CHECK(tq.element(Q.residual_left(i, k)) ==
              tight_interior(L, compose(right_adjoint(L, tq.element(i)), tq.element(k))));
      }
    }
    // Unital exactly when the identity is tight, which is when L is distributive.
    const auto u = find_unit(Q).unit;
    CHECK(u.has_value() == is_distributive(L));
    CHECK(u.has_value() == is_tight(L, Map::identity(L.size())));
    if (u) CHECK(tq.element(*u) == Map::identity(L.size()));
  }

  Budget tiny;
  tiny.max_candidates = 10;
  CHECK_THROWS_AS(tight_quantale(diamond(3), tiny), Error);
  std::vector<Map> partial = oracle::sup_endomaps(chain(3));
  partial.pop_back();
  CHECK_THROWS_AS(tight_quantale_from(chain(3), partial), Error);
}

TEST_CASE("elementary tensors") {
  const FiniteLattice M = diamond(3);
  const Map t = elementary_tensor(M, 2, 1);
  CHECK(t == Map(std::vector<Elem>{0, 2, 0, 0, 4}));
  CHECK(is_meet_preserving(M, t));
  CHECK(elementary_tensor(M, 2, 0) == Map(std::vector<Elem>{2, 2, 2, 2, 4}));
}

TEST_CASE("bullet quantale") {
  for (const FiniteLattice& L : {chain(3), diamond(3), pentagon(), boolean_lattice(2)}) {
    const BulletReport rep = bullet_quantale(L);
    CHECK(rep.verified());
    CHECK(rep.meet_maps == meet_maps_oracle(L));
    const TightQuantale tq = tight_quantale(L);
    CHECK(rep.cotight_count == tq.elements.size());
    REQUIRE(rep.quantale);
    const Quantale& B = *rep.quantale;
    for (Elem g = 0; g < B.size(); ++g)
      for (Elem f = 0; f < B.size(); f += 3) {
        const Map expect =
            meet_closure(L, compose(raney_sup(L, rep.meet_maps[g]), rep.meet_maps[f]));
        CHECK(rep.meet_maps[B.mult(g, f)] == expect);
      }

    // The cotight quotient is unital exactly when the tight quantale is, and
    // rans carries one unit to the other.
    const QuotientQuantale Qc = quotient_quantale(B, compose(rep.perp, rep.perp));
    CHECK(Qc.closed.size() == tq.elements.size());
    for (Elem i = 0; i < Qc.closed.size(); ++i)
      CHECK(tq.element(rep.iso(i)) == raney_sup(L, rep.meet_maps[Qc.embed(i)]));
    const auto uq = find_unit(Qc.quantale).unit;
    const auto ut = find_unit(tq.quantale).unit;
    CHECK(uq.has_value() == ut.has_value());
    if (uq) CHECK(rep.iso(*uq) == *ut);
  }
  CHECK(bullet_quantale(diamond(3)).meet_maps.size() == 50);
}

TEST_CASE("transform and star examples") {
  const FiniteLattice C = chain(3), M = diamond(3);
  const Map bottom5 = Map::constant(5, 0);
  // rans(id) on a chain is the predecessor map; rand(id) gives id back.
  CHECK(raney_sup(C, Map::identity(3)) == Map(std::vector<Elem>{0, 0, 1}));
  CHECK(tight_interior(C, Map::identity(3)) == Map::identity(3));
  CHECK(tight_interior(M, Map::identity(5)) == bottom5);
  CHECK(cotight_closure(C, Map::identity(3)) == Map::identity(3));
  CHECK_FALSE(is_tight(M, Map::identity(5)));
  CHECK(is_tight(boolean_lattice(3), Map::identity(8)));
  for (Elem y = 0; y < 5; ++y) {
    CHECK(raney_sup(M, Map::constant(5, y)) == c_map(M, y));
    CHECK(star(M, c_map(M, y)) == a_map(M, y));
    CHECK(star(M, a_map(M, y)) == c_map(M, y));
    for (Elem x = 0; x < 5; ++x) CHECK(is_tight(M, compose(c_map(M, y), a_map(M, x))));
  }
  CHECK(c_map(M, 0) == bottom5);
  CHECK(a_map(M, 4) == bottom5);
  CHECK(compose(c_map(M, 2), a_map(M, 1)) == Map(std::vector<Elem>{0, 0, 2, 2, 2}));
  for (const auto& [y, x] : decompose_tight(M, bottom5))
    CHECK(compose(c_map(M, y), a_map(M, x)) == bottom5);
  const Map f = compose(c_map(M, 2), a_map(M, 1));
  CHECK(tight_interior(M, f) == f);
}

TEST_CASE("rho(rans f) = rani(lambda f) for meet-preserving f") {
  for (const FiniteLattice& L : oracle::small_lattices())
    for (const Map& f : meet_maps_oracle(L))
      CHECK(right_adjoint(L, raney_sup(L, f)) == raney_inf(L, left_adjoint(L, f)));
}

TEST_CASE("meet closure absorbs an inner closure") {
  const FiniteLattice M = diamond(3);
  const std::vector<Map> sups = oracle::sup_endomaps(M);
  std::size_t checked = 0;
  for (const Map& f : enumerate_endofunctions(5)) {
    if (!monotone(M, f)) continue;
    const Map mf = meet_closure(M, f);
    for (std::size_t i = 0; i < sups.size(); i += 3) {
      CHECK(meet_closure(M, compose(sups[i], mf)) == meet_closure(M, compose(sups[i], f)));
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("tight maps of M_3: closure, shift relation and one-sided units") {
  const FiniteLattice M = diamond(3);
  const TightQuantale tq = tight_quantale(M);
  const std::set<Map> tight(tq.elements.begin(), tq.elements.end());
  for (const Map& f : tq.elements)
    for (const Map& g : tq.elements) {
      CHECK(tight.contains(compose(f, g)));
      CHECK(tight.contains(pointwise_join(M, f, g)));
    }
  for (const Map& f : tq.elements)
    for (const Map& g : tq.elements) {
      const Map sg = star(M, g);
      for (const Map& h : tq.elements)
        CHECK(leq_maps(M, compose(f, g), star(M, h)) == leq_maps(M, compose(h, f), sg));
    }

  for (const FiniteLattice& L : oracle::small_lattices()) {
    const TightQuantale t = tight_quantale(L);
    const Quantale& Q = t.quantale;
    for (Elem u = 0; u < Q.size(); ++u) {
      bool left = true, right = true;
      for (Elem x = 0; x < Q.size(); ++x) {
        left = left && Q.mult(u, x) == x;
        right = right && Q.mult(x, u) == x;
      }
      if (left || right) CHECK(t.element(u) == Map::identity(L.size()));
    }
  }
}

TEST_CASE("elementary tensors under the bullet product") {
  for (const FiniteLattice& L : {chain(3), diamond(3), pentagon()}) {
    const Elem n = static_cast<Elem>(L.size());
    const Map bot = meet_closure(L, Map::constant(n, L.bot()));
    for (Elem v = 0; v < n; ++v)
      for (Elem u = 0; u < n; ++u)
        for (Elem y = 0; y < n; ++y)
          for (Elem x = 0; x < n; ++x) {
            const Map prod = meet_closure(
                L, compose(raney_sup(L, elementary_tensor(L, v, u)), elementary_tensor(L, y, x)));
            CHECK(prod == (L.leq(y, u) ? bot : elementary_tensor(L, v, x)));
          }
  }
}
