#ifndef QLAB_IO_HPP
#define QLAB_IO_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>

#include "qlab/mn.hpp"
#include "qlab/nucleus.hpp"
#include "qlab/quantale.hpp"
#include "qlab/raney.hpp"

namespace qlab::io {

using nlohmann::json;

/// Reads a JSON document; throws ParseError.
json read_json_file(const std::string& path);

// Lattice: {"n": int, "covers": [[lo, hi], ...], "labels": [str, ...]}.
// A bare string names a standard lattice: chainK, booleanK, MK, N5.
FiniteLattice lattice_from_json(const json& j);
FiniteLattice standard_lattice(const std::string& name);
json to_json(const FiniteLattice& L);

/// Quantale with its optional negation pair, as read from
/// {"lattice": ..., "mult": [[...]], "lneg": [...]?, "rneg": [...]?}.
struct QuantaleInput {
  FiniteLattice lattice;
  std::vector<Elem> mult;
  std::optional<std::pair<Map, Map>> negations;
};

QuantaleInput quantale_input_from_json(const json& j);
json to_json(const Quantale& Q, const FrobeniusStructure* F = nullptr);

// Semigroup {"n": int, "op": [[...]]}; relation {"rel": [[bool, ...]]}.
FiniteSemigroup semigroup_from_json(const json& j);
BinaryRelation relation_from_json(const json& j);

// EndoMap {"image": [...]}, or a bare array.
Map map_from_json(const json& j, std::size_t n);

json to_json(const SerrePairReport& r);
json to_json(const IsoReport& r);
json to_json(const BulletReport& r);
json to_json(const MnTightReport& r);
json to_json(const FormulaCheck& r);
json to_json(const PentagonDiamondReport& r);
json to_json(const PositivityReport& r);
json to_json(const ClosureSublatticeReport& r);
json to_json(const Error& e);

}  // namespace qlab::io

#endif  // QLAB_IO_HPP
