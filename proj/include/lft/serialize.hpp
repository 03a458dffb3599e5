#pragma once
// JSON emit/parse for every structure the tool reads or writes. Emission uses
// insertion-ordered JSON so files are deterministic, and every value that is
// emitted re-parses into an equal value. Parsers throw ParseError naming the
// offending field; domain-level failures (order not a lattice, members not a
// partition, ...) propagate as their own error types.

#include <memory>
#include <string>

#include "json.hpp"

#include "lft/connectives.hpp"
#include "lft/errors.hpp"
#include "lft/fuzzy.hpp"
#include "lft/lattice.hpp"
#include "lft/lawcheck.hpp"
#include "lft/partition.hpp"
#include "lft/systems.hpp"
#include "lft/transforms.hpp"

namespace lft {

using Json = nlohmann::ordered_json;

// Builtin carriers by name: "example8", "chainN" (N >= 1), "square", "unit".
// Returns nullptr when the name is not a builtin.
std::shared_ptr<const Lattice> builtin_lattice(const std::string& name);

// ---------------------------------------------------------------- emitters

// Finite carriers: {"name", "elements", "covers", "tables": {"join","meet"}}.
// The unit interval: {"name": "unit", "kind": "unit-interval", "epsilon"}.
Json lattice_to_json(const Lattice& lat);

// {"kind", "name", "lattice": <ref>, "closed_form"} for closed forms, or
// {"kind", "name", "lattice": <ref>, "table": [[...]]} for tabulated ones.
// The lattice reference is the builtin name when the carrier is a builtin,
// otherwise an inline lattice object.
Json connective_to_json(const BinaryConnective& c);

// {"name", "lattice": <ref>, "table": [...]} with images in element order,
// or {"name", "lattice": <ref>, "closed_form": "standard"}. Throws
// UnsupportedFormatError for function-backed negators with no table.
Json negator_to_json(const Negator& n);

// {"universe": [...], "members": {"A1": ["1","p","q"], ...}}.
Json partition_to_json(const LFuzzyPartition& p);

// {"kind": ..., "components": {"A1": "q", ...}}.
Json direct_result_to_json(const DirectResult& d);

Json validation_report_to_json(const ValidationReport& rep);

Json law_report_to_json(const LawReport& rep);

// Descriptor with the defining bundle: {"name", "universe", "index_set",
// "onto_map", "kind", "operator": {"partition", "kind", "connective",
// "negator"?}}. The caller supplies the bundle the system was built from.
Json system_to_json(const TransformationSystem& sys, const LFuzzyPartition& p,
                    const BinaryConnective& conn, const Negator* neg = nullptr);

// ----------------------------------------------------------------- parsers

// A lattice value is either a builtin name (JSON string) or an inline object.
std::shared_ptr<const Lattice> lattice_from_json(const Json& j);

// `fallback` supplies the carrier when the JSON has no "lattice" field.
BinaryConnective connective_from_json(const Json& j,
                                      std::shared_ptr<const Lattice> fallback = nullptr);
Negator negator_from_json(const Json& j,
                          std::shared_ptr<const Lattice> fallback = nullptr);

LFuzzyPartition partition_from_json(const Json& j, std::shared_ptr<const Lattice> lat);

DirectResult direct_result_from_json(const Json& j, std::shared_ptr<const Lattice> lat);

// Rebuilds the system from its operator bundle and cross-checks the recorded
// universe, index set, and onto map against the rebuilt ones.
TransformationSystem system_from_json(const Json& j);

} // namespace lft
