#include "qlab/io.hpp"

#include <fstream>
#include <regex>

namespace qlab::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    parse_error(std::string("field '") + key + "': " + e.what());
  }
}

std::vector<Elem> flatten_square(const json& rows, std::size_t n, const char* what) {
  if (!rows.is_array() || rows.size() != n) parse_error(std::string(what) + " must have n rows");
  std::vector<Elem> out;
  out.reserve(n * n);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != n) parse_error(std::string(what) + " rows must have n entries");
    for (const json& v : row) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= n)
        parse_error(std::string(what) + " entries must be element indices");
      out.push_back(v.get<Elem>());
    }
  }
  return out;
}

json sorted_map(const std::map<std::string, std::vector<Elem>>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

FiniteLattice standard_lattice(const std::string& name) {
  static const std::regex pattern(R"((chain|boolean|M)(\d+))");
  std::smatch m;
  if (name == "N5" || name == "pentagon") return pentagon();
  if (!std::regex_match(name, m, pattern)) parse_error("unknown lattice name '" + name + "'");
  const std::size_t k = std::stoul(m[2].str());
  if (m[1] == "chain") return chain(k);
  if (m[1] == "boolean") return boolean_lattice(k);
  return diamond(k);
}

FiniteLattice lattice_from_json(const json& j) {
  if (j.is_string()) return standard_lattice(j.get<std::string>());
  const auto n = get<std::size_t>(j, "n");
  const auto covers = get<std::vector<std::pair<Elem, Elem>>>(j, "covers");
  for (const auto& [a, b] : covers)
    if (a >= n || b >= n) parse_error("cover pair out of range");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = get<std::vector<std::string>>(j, "labels");
  return FiniteLattice::from_covers(n, covers, std::move(labels));
}

json to_json(const FiniteLattice& L) {
  json j;
  j["n"] = L.size();
  j["covers"] = L.covers();
  std::vector<std::string> labels;
  for (Elem x = 0; x < L.size(); ++x) labels.push_back(L.label(x));
  j["labels"] = labels;
  return j;
}

QuantaleInput quantale_input_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lattice")) parse_error("missing field 'lattice'");
  QuantaleInput in{lattice_from_json(j.at("lattice")), {}, std::nullopt};
  const std::size_t n = in.lattice.size();
  if (!j.contains("mult")) parse_error("missing field 'mult'");
  in.mult = flatten_square(j.at("mult"), n, "mult");
  const bool has_l = j.contains("lneg"), has_r = j.contains("rneg");
  if (has_l != has_r) parse_error("lneg and rneg must be given together");
  if (has_l) in.negations = std::make_pair(map_from_json(j.at("lneg"), n), map_from_json(j.at("rneg"), n));
  return in;
}

json to_json(const Quantale& Q, const FrobeniusStructure* F) {
  json j;
  j["lattice"] = to_json(Q.lattice());
  const std::size_t n = Q.size();
  json rows = json::array();
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> row(n);
    for (Elem y = 0; y < n; ++y) row[y] = Q.mult(x, y);
    rows.push_back(row);
  }
  j["mult"] = rows;
  if (F) {
    j["lneg"] = F->lneg.image;
    j["rneg"] = F->rneg.image;
  }
  return j;
}

FiniteSemigroup semigroup_from_json(const json& j) {
  const auto n = get<std::size_t>(j, "n");
  if (!j.contains("op")) parse_error("missing field 'op'");
  return FiniteSemigroup(n, flatten_square(j.at("op"), n, "op"));
}

BinaryRelation relation_from_json(const json& j) {
  const auto rows = get<std::vector<std::vector<bool>>>(j, "rel");
  const std::size_t n = rows.size();
  std::vector<std::uint8_t> table;
  for (const auto& row : rows) {
    if (row.size() != n) parse_error("relation must be square");
    table.insert(table.end(), row.begin(), row.end());
  }
  return BinaryRelation(n, std::move(table));
}

Map map_from_json(const json& j, std::size_t n) {
  const json& arr = j.is_object() ? j.value("image", json()) : j;
  if (!arr.is_array() || arr.size() != n) parse_error("map image must list one entry per element");
  Map f;
  for (const json& v : arr) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= n)
      parse_error("map entries must be element indices");
    f.image.push_back(v.get<Elem>());
  }
  return f;
}

json to_json(const SerrePairReport& r) {
  return {{"antitone", r.antitone},
          {"is_inverse_pair", r.is_inverse_pair},
          {"serre_identity", r.serre_identity},
          {"serre_identities", r.serre_identities},
          {"shift_holds", r.shift_holds},
          {"is_galois", r.is_galois},
          {"commutes", r.commutes},
          {"images_coincide", r.images_coincide},
          {"is_frobenius", r.is_frobenius()},
          {"is_serre_gc", r.is_serre_gc()},
          {"witnesses", sorted_map(r.witnesses)}};
}

json to_json(const IsoReport& r) {
  return {{"relation_associative", r.relation_associative},
          {"relation_weakly_symmetric", r.relation_weakly_symmetric},
          {"closed_are_principal_downsets", r.closed_are_principal_downsets},
          {"join_inverts_downset", r.join_inverts_downset},
          {"homomorphism", r.homomorphism},
          {"negations_preserved", r.negations_preserved},
          {"closed_count", r.closed_count},
          {"downset_map", r.downset_map.image},
          {"verified", r.verified()}};
}

json to_json(const BulletReport& r) {
  json maps = json::array();
  for (const Map& f : r.meet_maps) maps.push_back(f.image);
  return {{"meet_preserving_count", r.meet_maps.size()},
          {"meet_maps", maps},
          {"is_quantale", r.quantale.has_value()},
          {"perp", r.perp.image},
          {"perp_is_serre_gc", r.perp_is_serre_gc},
          {"perp_self_adjoint", r.perp_self_adjoint},
          {"nucleus_is_cotight_closure", r.nucleus_is_cotight_closure},
          {"quotient_mult_formula", r.quotient_mult_formula},
          {"cotight_count", r.cotight_count},
          {"iso", r.iso.image},
          {"rans_is_isomorphism", r.rans_is_isomorphism},
          {"perp_to_star", r.perp_to_star},
          {"elementary_tensor_law", r.elementary_tensor_law},
          {"tensor_witness", r.tensor_witness},
          {"verified", r.verified()}};
}

json to_json(const MnTightReport& r) {
  json j = {{"n", r.n}, {"formula", r.formula_value}, {"by_class", r.by_class}};
  j["counted"] = r.counted ? json(*r.counted) : json(nullptr);
  j["consistent"] = r.consistent();
  return j;
}

json to_json(const FormulaCheck& r) {
  return {{"ok", r.ok}, {"checked", r.checked}, {"witnesses", r.witnesses}};
}

json to_json(const PentagonDiamondReport& r) {
  json j = {{"sup_count", r.sup_count},
            {"iso_count", r.iso_count},
            {"tight_count", r.tight_count},
            {"identity_holds", r.identity_holds}};
  j["witness"] = r.witness ? json(r.witness->image) : json(nullptr);
  return j;
}

json to_json(const PositivityReport& r) {
  return {{"ok", r.ok},
          {"checked", r.checked},
          {"bottom_positive", r.bottom_positive},
          {"witnesses", r.witnesses}};
}

json to_json(const ClosureSublatticeReport& r) {
  json j = {{"closure_count", r.closure_count},
            {"sublattice_count", r.sublattice_count},
            {"bijection", r.bijection},
            {"tight_iff_distributive", r.tight_iff_distributive},
            {"tight_closure_count", r.tight_closure_count},
            {"hom_meet_is_identity", r.hom_meet_is_identity},
            {"tight_meet_is_bottom", r.tight_meet_is_bottom},
            {"verified", r.verified()}};
  j["collapsing_pair"] = r.collapsing_pair
                             ? json::array({r.collapsing_pair->first.image, r.collapsing_pair->second.image})
                             : json(nullptr);
  return j;
}

json to_json(const Error& e) {
  return {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"witness", e.witness()}};
}

}  // namespace qlab::io
