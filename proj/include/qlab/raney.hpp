#ifndef QLAB_RANEY_HPP
#define QLAB_RANEY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qlab/nucleus.hpp"
#include "qlab/quantale.hpp"

namespace qlab {

// ---------------------------------------------------------------------------
// Raney transforms. f is an arbitrary endofunction unless stated otherwise.

/// rans(f)(x) = join{f(t) | x !<= t}; always sup-preserving.
Map raney_sup(const FiniteLattice& L, const Map& f);
/// rani(f)(x) = meet{f(t) | t !<= x}; always meet-preserving.
Map raney_inf(const FiniteLattice& L, const Map& f);

/// g(y) = meet{t | f(t) !<= y}. Right adjoint of rans(f) even when f is not
/// monotone.
Map raney_sup_right_adjoint(const FiniteLattice& L, const Map& f);

/// rans(rani(f)): the greatest tight map below f.
Map tight_interior(const FiniteLattice& L, const Map& f);
/// rani(rans(f)): the least cotight map above f.
Map cotight_closure(const FiniteLattice& L, const Map& f);

bool is_tight(const FiniteLattice& L, const Map& f);
bool is_cotight(const FiniteLattice& L, const Map& f);

/// rans(rho(f)). Throws NotSupPreserving.
Map star(const FiniteLattice& L, const Map& f);

/// c_y: bot -> bot, everything else -> y.
Map c_map(const FiniteLattice& L, Elem y);
/// a_x: t -> top if t !<= x, else bot.
Map a_map(const FiniteLattice& L, Elem x);

/// Least meet-preserving map above a monotone f. Throws NotMonotone.
Map meet_closure(const FiniteLattice& L, const Map& f);

/// Pairs (rani(f)(t), t) over all t; the join of c_y ∘ a_x over the pairs
/// is checked to give back f. Throws NotTight.
std::vector<std::pair<Elem, Elem>> decompose_tight(const FiniteLattice& L, const Map& f);

/// (y ⊗ x)(t) = top if t = top, y if x <= t < top, bot otherwise.
Map elementary_tensor(const FiniteLattice& L, Elem y, Elem x);

// ---------------------------------------------------------------------------
// The tight quantale.

/// Tight endomaps of L under composition (f * g = f ∘ g) with the star
/// negation on both sides. Element i is elements[i]; elements are sorted.
struct TightQuantale {
  FiniteLattice base;
  std::vector<Map> elements;
  Quantale quantale;
  FrobeniusStructure frobenius;

  std::optional<Elem> index_of(const Map& f) const;
  const Map& element(Elem i) const { return elements[i]; }
};

/// Throws BudgetExceeded when the sup-endomap search space exceeds
/// budget.max_candidates.
TightQuantale tight_quantale(const FiniteLattice& L, const Budget& budget = {});

/// Tight quantale built from an already enumerated list of sup-preserving maps.
TightQuantale tight_quantale_from(const FiniteLattice& L, const std::vector<Map>& sup_maps);

// ---------------------------------------------------------------------------
// Meet-preserving maps under g • f = meet_closure(rans(g) ∘ f).

struct BulletReport {
  /// Hom_∧(L, L), sorted; quantale index i is meet_maps[i].
  std::vector<Map> meet_maps;
  std::optional<Quantale> quantale;
  /// perp(f) = rani(lambda(f)), on quantale indices.
  Map perp;
  bool perp_is_serre_gc = false;
  bool perp_self_adjoint = false;
  bool nucleus_is_cotight_closure = false;
  bool quotient_mult_formula = false;
  std::size_t cotight_count = 0;
  /// cotight quotient index -> tight quantale index, via rans.
  Map iso;
  bool rans_is_isomorphism = false;
  bool perp_to_star = false;
  bool elementary_tensor_law = false;
  std::vector<Elem> tensor_witness;

  bool verified() const {
    return quantale && perp_is_serre_gc && perp_self_adjoint && nucleus_is_cotight_closure &&
           quotient_mult_formula && rans_is_isomorphism && perp_to_star && elementary_tensor_law;
  }
};

BulletReport bullet_quantale(const FiniteLattice& L, const Budget& budget = {});

}  // namespace qlab

#endif  // QLAB_RANEY_HPP
