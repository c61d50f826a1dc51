#ifndef QLAB_MN_HPP
#define QLAB_MN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlab/raney.hpp"

namespace qlab {

// M(n) has bot = 0, atoms 1..n and top = n+1 throughout.

struct TightProfile {
  bool tight = false;
  bool image_distributive = false;
  std::size_t atoms_in_image = 0;
};

/// Tightness, distributivity of f(M_n) and the number of atoms in f(M_n),
/// each computed separately. Throws NotSupPreserving, or ValidationFailed if
/// the three disagree.
TightProfile tight_profile_mn(std::size_t n, const Map& f);

/// Sup-endomaps of M(n) from atom images whose pairwise joins agree. Sorted.
std::vector<Map> enumerate_sup_endomaps_mn(std::size_t n, const Budget& budget = {});

/// ½n⁴ − n³ + (5/2)n² + 2n + 2
std::uint64_t tight_count_formula(std::size_t n);

struct MnTightReport {
  std::size_t n = 0;
  std::optional<std::uint64_t> counted;
  std::uint64_t formula_value = 0;
  /// constants, c_or_a, c_comp_a, c_join_a, f_gen, other
  std::map<std::string, std::uint64_t> by_class;

  bool consistent() const { return !counted || *counted == formula_value; }
};

/// Throws BudgetExceeded when enumerating past budget.max_candidates.
MnTightReport count_tight_mn(std::size_t n, bool enumerate = true, const Budget& budget = {});

/// bot -> bot, x1 -> y1, x2 -> y2, everything else -> top. Throws
/// NotDistinctAtoms unless x1 != x2, y1 != y2 and all four are atoms.
Map f_gen(std::size_t n, Elem x1, Elem y1, Elem x2, Elem y2);

/// c_y ∨ a_x, pointwise.
Map c_join_a(const FiniteLattice& L, Elem y, Elem x);

struct FormulaCheck {
  bool ok = true;
  std::size_t checked = 0;
  /// parameter tuples where the formula failed
  std::vector<std::vector<Elem>> witnesses;
};

/// star(c_y ∘ a_x) = c_x ∨ a_y over all elements x, y, and
/// star(f_{x1,y1,x2,y2}) = f_{y1,x2,y2,x1} over all valid atom tuples.
FormulaCheck check_negation_formulas(std::size_t n);

struct PentagonDiamondReport {
  std::size_t sup_count = 0;
  std::size_t iso_count = 0;
  std::size_t tight_count = 0;
  /// tight = sup-preserving minus order isomorphisms
  bool identity_holds = false;
  /// a sup-preserving map that is neither tight nor an isomorphism
  std::optional<Map> witness;
};

PentagonDiamondReport pentagon_diamond_check(const FiniteLattice& L);

struct PositivityReport {
  bool ok = true;
  std::size_t checked = 0;
  bool bottom_positive = false;
  /// tight quantale indices f whose f\f or f/f is not positive, or f\f !>= id
  std::vector<Elem> witnesses;
};

PositivityReport positivity_suite_mn(std::size_t n);

struct ClosureSublatticeReport {
  std::size_t closure_count = 0;
  std::size_t sublattice_count = 0;
  bool bijection = false;
  bool tight_iff_distributive = false;
  std::size_t tight_closure_count = 0;
  /// two tight closures whose meet among sup-preserving maps is id
  std::optional<std::pair<Map, Map>> collapsing_pair;
  bool hom_meet_is_identity = false;
  bool tight_meet_is_bottom = false;

  bool verified() const {
    return bijection && tight_iff_distributive && hom_meet_is_identity && tight_meet_is_bottom;
  }
};

ClosureSublatticeReport closures_vs_sublattices(std::size_t n);

}  // namespace qlab

#endif  // QLAB_MN_HPP
