// qlab: batch front end over the library. Reads JSON inputs, prints a JSON
// envelope {"meta": ..., "report": ...}; summaries go to stderr.
//
// Exit status: 0 all checks pass, 1 a mathematical check failed, 2 bad
// input or budget.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "qlab/io.hpp"

using namespace qlab;
using io::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string lattice, quantale, semigroup, relation, map, out;
  std::size_t n = 3;
  bool enumerate = true;
  bool find_unit = false;
  Budget budget;
};

struct Outcome {
  json report;
  bool passed = true;
  std::string summary;
};

FiniteLattice load_lattice(const Options& o) {
  if (o.lattice.empty()) throw Error(ErrorKind::ParseError, "--lattice is required");
  if (std::ifstream(o.lattice).good()) return io::lattice_from_json(io::read_json_file(o.lattice));
  return io::standard_lattice(o.lattice);
}

io::QuantaleInput load_quantale_input(const Options& o) {
  if (o.quantale.empty()) throw Error(ErrorKind::ParseError, "--quantale is required");
  return io::quantale_input_from_json(io::read_json_file(o.quantale));
}

Quantale load_quantale(const Options& o, std::optional<std::pair<Map, Map>>* negations = nullptr) {
  io::QuantaleInput in = load_quantale_input(o);
  if (negations) *negations = in.negations;
  return check_quantale(std::move(in.lattice), std::move(in.mult));
}

std::pair<Map, Map> require_negations(const std::optional<std::pair<Map, Map>>& neg) {
  if (!neg) throw Error(ErrorKind::ParseError, "quantale file needs lneg and rneg");
  return *neg;
}

json unit_json(const Quantale& Q) {
  const UnitReport u = find_unit(Q);
  return {{"unit", u.unit ? json(*u.unit) : json("none")},
          {"candidate", u.candidate},
          {"right_contractive", u.right_contractive},
          {"left_contractive", u.left_contractive}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

Outcome check_lattice(const Options& o) {
  try {
    const FiniteLattice L = load_lattice(o);
    json r = io::to_json(L);
    r["distributive"] = is_distributive(L);
    r["join_irreducibles"] = L.join_irreducibles();
    r["atoms"] = L.atoms();
    r["bot"] = L.bot();
    r["top"] = L.top();
    r["is_lattice"] = true;
    return {r, true, "lattice with " + std::to_string(L.size()) + " elements"};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotALattice && e.kind() != ErrorKind::NotBounded &&
        e.kind() != ErrorKind::CycleDetected)
      throw;
    return {{{"is_lattice", false}, {"violation", io::to_json(e)}}, false, e.what()};
  }
}

Outcome check_quantale_verb(const Options& o) {
  io::QuantaleInput in = load_quantale_input(o);
  if (auto v = find_quantale_violation(in.lattice, in.mult)) {
    json r = {{"is_quantale", false},
              {"violation",
               {{"kind", std::string(to_string(v->kind))}, {"law", v->law}, {"witness", v->witness}}}};
    return {r, false, "not a quantale: " + v->law};
  }
  const Quantale Q = check_quantale(std::move(in.lattice), std::move(in.mult));
  json r = {{"is_quantale", true}, {"positive", is_positive_quantale(Q)}};
  r["unit"] = unit_json(Q);
  return {r, true, "quantale with " + std::to_string(Q.size()) + " elements"};
}

Outcome check_frobenius_verb(const Options& o) {
  std::optional<std::pair<Map, Map>> neg;
  const Quantale Q = load_quantale(o, &neg);
  const auto [l, r] = require_negations(neg);
  const SerrePairReport rep = check_frobenius(Q, l, r);
  const bool ok = rep.is_frobenius() && rep.shift_holds;
  return {io::to_json(rep), ok, ok ? "Frobenius structure" : "not a Frobenius structure"};
}

Outcome residuals(const Options& o) {
  const Quantale Q = load_quantale(o);
  const std::size_t n = Q.size();
  json left = json::array(), right = json::array();
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> lrow(n), rrow(n);
    for (Elem y = 0; y < n; ++y) {
      lrow[y] = Q.residual_left(x, y);
      rrow[y] = Q.residual_right(x, y);
    }
    left.push_back(lrow);
    right.push_back(rrow);
  }
  return {{{"left", left}, {"right", right}}, true, "residual tables"};
}

Outcome chu_verb(const Options& o) {
  const Quantale Q = load_quantale(o);
  const ChuQuantale C = chu(Q);
  const bool base_unital = find_unit(Q).unit.has_value();
  const bool chu_unital = find_unit(C.quantale).unit.has_value();
  json r = {{"quantale", io::to_json(C.quantale, &C.frobenius)},
            {"base_unital", base_unital},
            {"chu_unital", chu_unital}};
  return {r, base_unital == chu_unital,
          "Chu construction with " + std::to_string(C.quantale.size()) + " elements"};
}

Outcome nucleus_verb(const Options& o) {
  std::optional<std::pair<Map, Map>> neg;
  const Quantale Q = load_quantale(o, &neg);
  json r;
  if (!o.map.empty()) {
    const Map j = io::map_from_json(io::read_json_file(o.map), Q.size());
    const NucleusCheck c = is_nucleus(Q, j);
    r["is_nucleus"] = c.ok;
    if (!c) {
      r["failed_law"] = c.failed_law;
      r["witness"] = c.witness;
      return {r, false, "not a nucleus: " + c.failed_law};
    }
    const QuotientQuantale Qj = quotient_quantale(Q, j);
    r["closed"] = Qj.closed;
    r["quotient"] = io::to_json(Qj.quantale);
    return {r, true, "quotient with " + std::to_string(Qj.closed.size()) + " elements"};
  }
  const auto [l, rn] = require_negations(neg);
  const SerrePairReport rep = check_frobenius(Q, l, rn);
  r["serre_gc"] = io::to_json(rep);
  if (!rep.is_serre_gc()) return {r, false, "not a Serre Galois connection"};
  const SerreQuotient sq = serre_gc_quotient(Q, l, rn);
  r["nucleus"] = sq.quotient.nucleus.image;
  r["closed"] = sq.quotient.closed;
  r["quotient"] = io::to_json(sq.quotient.quantale, &sq.frobenius);
  const auto lifted = lift_serre(Q, sq.quotient, sq.frobenius);
  r["round_trip"] = lifted.first == l && lifted.second == rn;
  const auto zero = representable_flags(Q, l, rn);
  r["representable_by"] = zero ? json(*zero) : json(nullptr);
  return {r, true, "Serre quotient with " + std::to_string(sq.quotient.closed.size()) + " elements"};
}

Outcome phase_verb(const Options& o) {
  if (o.semigroup.empty() || o.relation.empty())
    throw Error(ErrorKind::ParseError, "--semigroup and --relation are required");
  const FiniteSemigroup S = io::semigroup_from_json(io::read_json_file(o.semigroup));
  const BinaryRelation R = io::relation_from_json(io::read_json_file(o.relation));
  if (S.size() > o.budget.max_powerset)
    throw Error(ErrorKind::BudgetExceeded, "semigroup exceeds the powerset budget");
  const RelationGalois G(S, R);
  json r = {{"associative", G.associative()}, {"comm1", G.comm1()}, {"comm2", G.comm2()}};
  if (!G.associative() || !G.weakly_symmetric()) {
    if (G.associativity_witness()) r["associativity_witness"] = *G.associativity_witness();
    return {r, false, "relation is not associative and weakly symmetric"};
  }
  const PhaseQuantale P = phase_quantale(S, R);
  json closed = json::array();
  for (const ElemSet& X : P.closed) {
    std::vector<Elem> members;
    for (auto x = X.find_first(); x != ElemSet::npos; x = X.find_next(x)) members.push_back(Elem(x));
    closed.push_back(members);
  }
  r["closed"] = closed;
  r["quantale"] = io::to_json(P.quantale, &P.frobenius);
  return {r, true, "phase quantale with " + std::to_string(P.closed.size()) + " closed sets"};
}

Outcome represent_verb(const Options& o) {
  std::optional<std::pair<Map, Map>> neg;
  const Quantale Q = load_quantale(o, &neg);
  auto [l, r] = require_negations(neg);
  const IsoReport rep = represent_frobenius(Q, FrobeniusStructure{l, r});
  return {io::to_json(rep), rep.verified(),
          rep.verified() ? "represented as a phase quantale" : "representation failed"};
}

Outcome raney_verb(const Options& o) {
  const FiniteLattice L = load_lattice(o);
  if (o.map.empty()) throw Error(ErrorKind::ParseError, "--map is required");
  const Map f = io::map_from_json(io::read_json_file(o.map), L.size());
  json r = {{"rans", raney_sup(L, f).image},
            {"rani", raney_inf(L, f).image},
            {"tight", is_tight(L, f)},
            {"cotight", is_cotight(L, f)},
            {"tight_interior", tight_interior(L, f).image},
            {"cotight_closure", cotight_closure(L, f).image}};
  r["star"] = is_sup_preserving(L, f) ? json(star(L, f).image) : json(nullptr);
  if (is_tight(L, f)) r["decomposition"] = decompose_tight(L, f);
  return {r, true, std::string("map is ") + (is_tight(L, f) ? "" : "not ") + "tight"};
}

Outcome tight_quantale_verb(const Options& o) {
  const FiniteLattice L = load_lattice(o);
  const TightQuantale tq = tight_quantale(L, o.budget);
  json elements = json::array();
  for (const Map& f : tq.elements) elements.push_back(f.image);
  json r = {{"elements", elements}, {"quantale", io::to_json(tq.quantale, &tq.frobenius)}};
  std::string summary = std::to_string(tq.elements.size()) + " tight maps";
  if (o.find_unit) {
    r["unit"] = unit_json(tq.quantale);
    const auto u = find_unit(tq.quantale).unit;
    summary += u ? ", unit: " + std::to_string(*u) : ", unit: none";
  }
  return {r, true, summary};
}

Outcome bullet_verb(const Options& o) {
  const BulletReport rep = bullet_quantale(load_lattice(o), o.budget);
  return {io::to_json(rep), rep.verified(),
          "bullet quantale isomorphism " + std::string(rep.verified() ? "verified" : "FAILED")};
}

Outcome mn_count(const Options& o) {
  const MnTightReport rep = count_tight_mn(o.n, o.enumerate, o.budget);
  std::string s = "M" + std::to_string(o.n) + ": formula " + std::to_string(rep.formula_value);
  if (rep.counted) s += ", counted " + std::to_string(*rep.counted);
  return {io::to_json(rep), rep.consistent(), s};
}

Outcome mn_negations(const Options& o) {
  const FormulaCheck c = check_negation_formulas(o.n);
  return {io::to_json(c), c.ok, std::to_string(c.checked) + " negation formulas checked"};
}

Outcome mn_positivity(const Options& o) {
  const PositivityReport p = positivity_suite_mn(o.n);
  return {io::to_json(p), p.ok && !p.bottom_positive,
          std::to_string(p.checked) + " residual squares checked"};
}

Outcome report_verb(const Options& o) {
  const MnTightReport count = count_tight_mn(o.n, o.enumerate, o.budget);
  const FormulaCheck neg = check_negation_formulas(o.n);
  const PositivityReport pos = positivity_suite_mn(o.n);
  const ClosureSublatticeReport cl = closures_vs_sublattices(o.n);
  const PentagonDiamondReport pd = pentagon_diamond_check(diamond(o.n));
  json r = {{"count", io::to_json(count)},
            {"negations", io::to_json(neg)},
            {"positivity", io::to_json(pos)},
            {"closures", io::to_json(cl)},
            {"pentagon_diamond", io::to_json(pd)}};
  const bool ok = count.consistent() && neg.ok && pos.ok && !pos.bottom_positive;
  return {r, ok, "M" + std::to_string(o.n) + " report"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quantale toolkit"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t max_candidates = o.budget.max_candidates;
  unsigned max_powerset = o.budget.max_powerset;

  const std::map<std::string, std::function<Outcome(const Options&)>> verbs = {
      {"check-lattice", check_lattice},     {"check-quantale", check_quantale_verb},
      {"check-frobenius", check_frobenius_verb}, {"residuals", residuals},
      {"chu", chu_verb},                    {"nucleus", nucleus_verb},
      {"phase", phase_verb},                {"represent", represent_verb},
      {"raney", raney_verb},                {"tight-quantale", tight_quantale_verb},
      {"bullet", bullet_verb},              {"mn-count", mn_count},
      {"mn-negations", mn_negations},       {"mn-positivity", mn_positivity},
      {"report", report_verb},
  };
  for (const auto& [name, fn] : verbs) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--lattice", o.lattice, "lattice JSON file or name (chainK, booleanK, MK, N5)");
    sub->add_option("--quantale", o.quantale, "quantale JSON file");
    sub->add_option("--semigroup", o.semigroup, "semigroup JSON file");
    sub->add_option("--relation", o.relation, "relation JSON file");
    sub->add_option("--map", o.map, "endomap JSON file");
    sub->add_option("--n", o.n, "atom count of M(n)");
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_option("--max-candidates", max_candidates);
    sub->add_option("--max-powerset", max_powerset);
    sub->add_flag("--enumerate,!--no-enumerate", o.enumerate);
    sub->add_flag("--find-unit", o.find_unit);
  }
  CLI11_PARSE(app, argc, argv);
  o.budget.max_candidates = max_candidates;
  o.budget.max_powerset = max_powerset;
  const std::string verb = app.get_subcommands().front()->get_name();

  json envelope = {{"meta", {{"tool", "qlab"}, {"version", kVersion}, {"verb", verb}}}};
  int status = 0;
  try {
    Outcome out = verbs.at(verb)(o);
    envelope["report"] = std::move(out.report);
    envelope["meta"]["passed"] = out.passed;
    std::cerr << verb << ": " << out.summary << "\n";
    status = out.passed ? 0 : 1;
  } catch (const Error& e) {
    envelope["report"] = {{"error", io::to_json(e)}};
    envelope["meta"]["passed"] = false;
    std::cerr << verb << ": " << e.what() << "\n";
    status = 2;
  }

  const std::string text = envelope.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  return status;
}
