#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qlab/quantale.hpp"
#include "qlab/raney.hpp"

using namespace qlab;

namespace {

Map swap2() { return Map(std::vector<Elem>{1, 0}); }

std::vector<Quantale> battery() {
  std::vector<Quantale> out;
  out.push_back(fixture::counterexample());
  out.push_back(fixture::trivial(chain(1)));
  out.push_back(fixture::trivial(chain(2)));
  out.push_back(fixture::trivial(diamond(3)));
  out.push_back(fixture::goedel_chain(2));
  out.push_back(fixture::goedel_chain(3));
  out.push_back(fixture::lukasiewicz_chain(4));
  out.push_back(fixture::boolean_meet(2));
  out.push_back(tight_quantale(chain(2)).quantale);
  out.push_back(tight_quantale(chain(3)).quantale);
  out.push_back(chu(fixture::goedel_chain(2)).quantale);
  out.push_back(chu(fixture::trivial(chain(2))).quantale);
  out.push_back(chu(fixture::counterexample()).quantale);
  return out;
}

}  // namespace

TEST_CASE("check_quantale accepts valid tables") {
  const Quantale Q = fixture::counterexample();
  CHECK(Q.mult(2, 2) == 1);
  CHECK(Q.mult(1, 2) == 0);
  CHECK(tight_quantale(diamond(3)).quantale.size() == 44);
}

TEST_CASE("check_quantale reports the first violated law") {
  // 1*1 = 2 on the 3-chain: associative, but 1*(1 v 2) = 0 while 1*1 v 1*2 = 2.
  std::vector<Elem> bad{0, 0, 0, 0, 2, 0, 0, 0, 0};
  const auto v = find_quantale_violation(chain(3), bad);
  REQUIRE(v);
  CHECK(v->kind == ErrorKind::NotDistributive);
  CHECK(v->witness == std::vector<Elem>{1, 1, 2});
  CHECK(v->law.starts_with("left"));
  try {
    check_quantale(chain(3), bad);
    FAIL("expected NotDistributive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDistributive);
  }

  // x*y = x v y is associative but does not absorb bottom.
  std::vector<Elem> join_op{0, 1, 1, 1};
  CHECK(find_quantale_violation(chain(2), join_op)->kind == ErrorKind::BottomNotAbsorbed);

  // (1*1)*2 = 0 but 1*(1*2) = 2.
  std::vector<Elem> nonassoc{0, 0, 0, 0, 0, 2, 0, 0, 1};
  const auto w = find_quantale_violation(chain(3), nonassoc);
  REQUIRE(w);
  CHECK(w->kind == ErrorKind::NotAssociative);
  CHECK(w->witness == std::vector<Elem>{1, 1, 2});

  std::vector<Elem> short_table{0, 0, 0};
  CHECK(find_quantale_violation(chain(2), short_table)->kind == ErrorKind::InvalidInput);
}

TEST_CASE("residual examples") {
  const Quantale T = fixture::trivial(diamond(3));
  for (Elem x = 0; x < 5; ++x)
    for (Elem z = 0; z < 5; ++z) {
      CHECK(T.residual_left(x, z) == T.top());
      CHECK(T.residual_right(z, x) == T.top());
    }
  const Quantale Q = fixture::counterexample();
  CHECK(Q.residual_left(0, 0) == 2);
  CHECK(Q.residual_left(1, 0) == 2);
  CHECK(Q.residual_left(2, 0) == 1);
}

TEST_CASE("residuation law and residual tables match the oracle") {
  for (const Quantale& Q : battery()) {
    REQUIRE(Q.size() <= 16);
    for (Elem x = 0; x < Q.size(); ++x)
      for (Elem y = 0; y < Q.size(); ++y) {
        CHECK(Q.residual_left(x, y) == oracle::residual_left(Q, x, y));
        CHECK(Q.residual_right(x, y) == oracle::residual_right(Q, x, y));
        for (Elem z = 0; z < Q.size(); ++z) {
          const bool prod = Q.leq(Q.mult(x, y), z);
          CHECK(prod == Q.leq(y, Q.residual_left(x, z)));
          CHECK(prod == Q.leq(x, Q.residual_right(z, y)));
        }
      }
  }
}

TEST_CASE("tight residual spot check against a brute-force join") {
  const FiniteLattice M = diamond(3);
  const TightQuantale tq = tight_quantale(M);
  const Map f = compose(c_map(M, 1), a_map(M, 2));
  const Elem i = *tq.index_of(f);
  std::vector<Elem> below;
  for (Elem h = 0; h < tq.elements.size(); ++h)
    if (pointwise_leq(M, compose(f, tq.element(h)), f)) below.push_back(h);
  const Elem expect = oracle::lub(tq.quantale.lattice(), below);
  CHECK(tq.quantale.residual_left(i, i) == expect);
  CHECK(tq.element(expect) == tight_interior(M, compose(right_adjoint(M, f), f)));
}

TEST_CASE("element flags") {
  const ElementFlags c = element_flags(fixture::counterexample(), 0);
  CHECK(c.weakly_cyclic);
  CHECK(c.cyclic);
  CHECK_FALSE(c.dualizing);

  const ElementFlags t = element_flags(fixture::trivial(chain(2)), 0);
  CHECK(t.cyclic);
  CHECK_FALSE(t.dualizing);

  const ChuQuantale C = chu(fixture::goedel_chain(2));
  const auto unit = find_unit(C.quantale).unit;
  REQUIRE(unit);
  const Elem zero = C.frobenius.rneg(*unit);
  CHECK(element_flags(C.quantale, zero).dualizing);
}

TEST_CASE("frobenius_from_dualizing") {
  const ChuQuantale C = chu(fixture::goedel_chain(2));
  const Elem zero = C.frobenius.rneg(*find_unit(C.quantale).unit);
  const FrobeniusStructure F = frobenius_from_dualizing(C.quantale, zero);
  CHECK(F.is_girard());
  CHECK(F == C.frobenius);

  CHECK_THROWS_AS(frobenius_from_dualizing(fixture::trivial(chain(2)), 0), Error);
  // In the three-element Goedel chain 0 is the annihilator; pseudo-complement
  // is not involutive.
  try {
    frobenius_from_dualizing(fixture::goedel_chain(3), 0);
    FAIL("expected NotDualizing");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDualizing);
  }
}

TEST_CASE("check_frobenius on the standard examples") {
  const FiniteLattice M = diamond(3);
  const TightQuantale tq = tight_quantale(M);
  const SerrePairReport t = check_frobenius(tq.quantale, tq.frobenius.lneg, tq.frobenius.rneg);
  CHECK(t.is_frobenius());
  CHECK(t.shift_holds);
  CHECK(t.serre_identities);
  CHECK(t.witnesses.empty());
  CHECK(tq.frobenius.is_girard());

  // Trivial quantale on M_3, r cycles the atoms a -> b -> c -> a.
  const Map r(std::vector<Elem>{4, 2, 3, 1, 0});
  const Map l(std::vector<Elem>{4, 3, 1, 2, 0});
  const TrivialQuantale T = trivial_quantale(M, std::make_pair(l, r));
  REQUIRE(T.frobenius);
  CHECK_FALSE(T.frobenius->is_girard());
  const SerrePairReport s = check_frobenius(T.quantale, l, r);
  CHECK(s.is_frobenius());
  CHECK(s.shift_holds);

  // Identity pair on the trivial 2-chain.
  const Quantale T2 = fixture::trivial(chain(2));
  const SerrePairReport id = check_frobenius(T2, Map::identity(2), Map::identity(2));
  CHECK(id.shift_holds);
  CHECK_FALSE(id.is_galois);
  CHECK_FALSE(id.antitone);
  CHECK(id.witnesses.contains("is_galois"));
}

TEST_CASE("shift witness on a quantale with a bad pair") {
  const Quantale Q = fixture::goedel_chain(2);
  const SerrePairReport rep = check_frobenius(Q, swap2(), Map::identity(2));
  CHECK_FALSE(rep.is_inverse_pair);
  CHECK_FALSE(rep.shift_holds);
  CHECK(rep.witnesses.at("shift_holds").size() == 3);
  CHECK_THROWS_AS(validate_frobenius(Q, swap2(), Map::identity(2)), Error);
}

TEST_CASE("Serre identities and contractive candidate for every Frobenius fixture") {
  std::vector<std::pair<Quantale, FrobeniusStructure>> items;
  for (const Quantale& Q : battery()) {
    const ChuQuantale C = chu(Q);
    if (C.quantale.size() <= 36) items.emplace_back(C.quantale, C.frobenius);
  }
  const TightQuantale tq = tight_quantale(diamond(3));
  items.emplace_back(tq.quantale, tq.frobenius);
  const TrivialQuantale T = trivial_quantale(chain(2), std::make_pair(swap2(), swap2()));
  items.emplace_back(T.quantale, *T.frobenius);
  CHECK(items.size() >= 8);
  for (const auto& [Q, F] : items) {
    const SerrePairReport rep = check_frobenius(Q, F.lneg, F.rneg);
    CHECK(rep.is_frobenius());
    CHECK(rep.serre_identities);
    CHECK(rep.shift_holds);
    const UnitReport u = find_unit(Q);
    CHECK(u.right_contractive);
    CHECK(u.left_contractive);
    if (u.unit) {
      CHECK(F.lneg(*u.unit) == F.rneg(*u.unit));
      CHECK(element_flags(Q, F.lneg(*u.unit)).dualizing);
    }
  }
}

TEST_CASE("dual multiplication") {
  const TightQuantale tq = tight_quantale(diamond(3));
  const Quantale& Q = tq.quantale;
  const FrobeniusStructure& F = tq.frobenius;
  const Elem b = Q.bot();
  CHECK(dual_mult(Q, F, b, b) == F.lneg(Q.mult(Q.top(), Q.top())));
  for (Elem x = 0; x < Q.size(); x += 7)
    for (Elem y = 0; y < Q.size(); y += 5)
      CHECK(dual_mult(Q, F, x, y) == F.rneg(Q.mult(F.rneg(y), F.rneg(x))));

  const Quantale base = fixture::goedel_chain(2);
  const ChuQuantale C = chu(base);
  const ChuView view(base);
  for (Elem x = 0; x < C.quantale.size(); ++x)
    for (Elem y = 0; y < C.quantale.size(); ++y)
      CHECK(dual_mult(C.quantale, C.frobenius, x, y) ==
            view.negation(view.mult(view.negation(y), view.negation(x))));

  // A pair that is not Frobenius makes the four expressions disagree.
  CHECK_THROWS_AS(dual_mult(base, FrobeniusStructure{swap2(), Map::identity(2)}, 1, 1), Error);
}

TEST_CASE("find_unit") {
  const TightQuantale c3 = tight_quantale(chain(3));
  const auto u = find_unit(c3.quantale).unit;
  REQUIRE(u);
  CHECK(c3.element(*u) == Map::identity(3));

  const UnitReport m3 = find_unit(tight_quantale(diamond(3)).quantale);
  CHECK_FALSE(m3.unit);
  CHECK(m3.right_contractive);
  CHECK(m3.left_contractive);

  CHECK_FALSE(find_unit(fixture::trivial(chain(2))).unit);
  CHECK(find_unit(fixture::trivial(chain(1))).unit == Elem{0});
  CHECK(find_unit(fixture::lukasiewicz_chain(4)).unit == Elem{3});
}

TEST_CASE("positivity") {
  const Quantale Q = tight_quantale(diamond(3)).quantale;
  CHECK(is_positive_quantale(Q));
  CHECK_FALSE(is_positive_element(Q, Q.bot()));
  for (const Quantale& R : battery()) {
    if (R.size() >= 2) CHECK_FALSE(is_positive_element(R, R.bot()));
    if (auto u = find_unit(R).unit) CHECK(is_positive_element(R, *u));
  }
}

TEST_CASE("trivial quantales") {
  const TrivialQuantale T = trivial_quantale(chain(2), std::make_pair(swap2(), swap2()));
  REQUIRE(T.frobenius);
  CHECK(T.frobenius->is_girard());
  CHECK_FALSE(find_unit(T.quantale).unit);
  try {
    trivial_quantale(chain(2), std::make_pair(Map::identity(2), Map::identity(2)));
    FAIL("expected NotADuality");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotADuality);
  }
  CHECK(is_duality(chain(3), Map(std::vector<Elem>{2, 1, 0}), Map(std::vector<Elem>{2, 1, 0})));
  CHECK_FALSE(is_duality(chain(3), Map::identity(3), Map::identity(3)));
}

TEST_CASE("chu construction") {
  const ChuQuantale T = chu(fixture::trivial(chain(2)));
  CHECK(T.quantale.size() == 4);
  CHECK_FALSE(find_unit(T.quantale).unit);
  CHECK(T.frobenius.is_girard());

  const Quantale base = fixture::goedel_chain(2);
  const ChuQuantale C = chu(base);
  const ChuView view(base);
  CHECK(find_unit(C.quantale).unit == view.encode(1, 1));

  const Quantale Q = fixture::counterexample();
  const ChuQuantale CQ = chu(Q);
  const ChuView v(Q);
  for (Elem x = 0; x < CQ.quantale.size(); ++x)
    for (Elem z = 0; z < CQ.quantale.size(); ++z) {
      const Elem x1 = v.first(x), x2 = v.second(x), z1 = v.first(z), z2 = v.second(z);
      const Elem expect =
          v.encode(Q.meet(Q.residual_left(x1, z1), Q.residual_right(x2, z2)), Q.mult(z2, x1));
      CHECK(CQ.quantale.residual_left(x, z) == expect);
      CHECK(v.residual_left(x, z) == expect);
      CHECK(CQ.quantale.residual_right(z, x) == v.residual_right(z, x));
    }
}

TEST_CASE("chu is unital exactly when the base is") {
  std::size_t unital = 0, nonunital = 0;
  for (const Quantale& Q : battery()) {
    if (Q.size() > 8) continue;
    const ChuQuantale C = chu(Q);
    const auto u = find_unit(Q).unit;
    const auto cu = find_unit(C.quantale).unit;
    CHECK(u.has_value() == cu.has_value());
    if (u) {
      ++unital;
      CHECK(*cu == ChuView(Q).encode(*u, Q.top()));
    } else {
      ++nonunital;
    }
  }
  CHECK(unital >= 3);
  CHECK(nonunital >= 3);
}

TEST_CASE("strongly continuous embeddings") {
  const Quantale Q = fixture::counterexample();
  CHECK(check_strongly_continuous(Q, Q, Map::identity(3)).strongly_continuous());
  CHECK_THROWS_AS(check_strongly_continuous(Q, Q, Map(std::vector<Elem>{0, 0, 2})), Error);

  // Sup-endomaps of the 2-chain into those of the 3-chain: bot -> bot,
  // id -> (0,2,2).
  const TightQuantale c2 = tight_quantale(chain(2));
  const TightQuantale c3 = tight_quantale(chain(3));
  REQUIRE(c2.elements.size() == 2);
  Map iota;
  iota.image = {*c3.index_of(Map(std::vector<Elem>{0, 0, 0})),
                *c3.index_of(Map(std::vector<Elem>{0, 2, 2}))};
  const ContinuityReport rep = check_strongly_continuous(c2.quantale, c3.quantale, iota);
  CHECK(rep.strongly_continuous());
  const Elem u2 = *find_unit(c2.quantale).unit, u3 = *find_unit(c3.quantale).unit;
  CHECK(iota(u2) != u3);
  CHECK(c3.quantale.leq(u3, iota(u2)));

  // tight(M_3) with a unit adjoined, then into its Chu construction along
  // f -> ((f, 0), top).
  const TightQuantale m3 = tight_quantale(diamond(3));
  const Quantale Qu = fixture::adjoin_unit(m3.quantale);
  REQUIRE(find_unit(Qu).unit == Elem{1});
  const ChuView view(Qu);
  Map j;
  for (Elem f = 0; f < m3.quantale.size(); ++f) j.image.push_back(view.encode(2 * f, Qu.top()));
  const ContinuityReport bad = check_strongly_continuous(m3.quantale, view, j);
  CHECK_FALSE(bad.strongly_continuous());
  CHECK_FALSE(bad.preserves_residuals);
  CHECK_FALSE(bad.failed_law.empty());
}

TEST_CASE("quantale isomorphisms") {
  const Quantale A = fixture::goedel_chain(2);
  const Quantale B = fixture::boolean_meet(1);
  const auto phi = find_quantale_isomorphism(A, B);
  REQUIRE(phi);
  CHECK(*phi == Map::identity(2));
  CHECK_FALSE(find_quantale_isomorphism(fixture::goedel_chain(3), fixture::lukasiewicz_chain(3)));
  const Quantale big = tight_quantale(diamond(3)).quantale;
  CHECK_THROWS_AS(find_quantale_isomorphism(big, big), Error);
  CHECK(is_quantale_isomorphism(big, big, Map::identity(big.size())));
  CHECK_FALSE(is_quantale_isomorphism(A, B, Map(std::vector<Elem>{1, 0})));
}
