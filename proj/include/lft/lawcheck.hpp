#pragma once

// Registry of algebraic laws checked by enumeration. Each law names the
// structures it needs (connectives, implicators, negator, partitions), a
// hypothesis gate, and a body quantified over elements or enumerated fuzzy
// sets. Reports are three-valued: a law whose hypotheses fail is reported
// as hypothesis-not-met rather than silently passing, and a failing law
// carries a replayable witness (the exact case that broke).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lft/connectives.hpp"
#include "lft/fuzzy.hpp"
#include "lft/lattice.hpp"
#include "lft/partition.hpp"

namespace lft {

enum class LawStatus { Passed, Failed, HypothesisNotMet };

std::string to_string(LawStatus s);

// Everything a law may quantify over. All supplied structures must share
// `lattice` as their carrier; laws that enumerate the carrier require it to
// be finite. `partition2` is the comparison target for the refinement law.
struct LawContext {
    std::shared_ptr<const Lattice> lattice;
    std::optional<BinaryConnective> theta;       // overlap map
    std::optional<BinaryConnective> eta;         // grouping map
    std::optional<BinaryConnective> res_impl;    // residual implicator of theta
    std::optional<BinaryConnective> cores_impl;  // co-residual implicator of eta
    std::optional<Negator> negator;
    std::optional<LFuzzyPartition> partition;
    std::optional<LFuzzyPartition> partition2;
    std::shared_ptr<const Universe> universe;
    std::size_t budget = 4096;
    std::uint64_t seed = 1;
};

struct LawReport {
    std::string id;
    std::string statement;
    LawStatus status = LawStatus::Passed;
    std::size_t cases_checked = 0;
    // First failing case, replayable through replay_failure; null otherwise.
    nlohmann::ordered_json witness;
    std::string failure;                        // human-readable detail
    std::vector<std::string> unmet_hypotheses;  // set when hypotheses fail
};

// Law ids in registration order (the canonical grouping of the registry).
std::vector<std::string> registered_laws();

// Runs one law. Throws UnknownLawError for an unregistered id,
// MissingContextSlotError when the context lacks a structure the law needs,
// and FiniteCarrierRequiredError on non-finite carriers.
LawReport run_law(const std::string& id, const LawContext& ctx);

// Runs every registered law and returns the reports sorted by id (segments
// compared numerically, so e.g. P3.2 precedes P3.10).
std::vector<LawReport> run_suite(const LawContext& ctx);

// Re-evaluates one law body on a single recorded case. Returns true when the
// case still fails — the guarantee a failed report's witness must satisfy.
bool replay_failure(const std::string& id, const LawContext& ctx,
                    const nlohmann::ordered_json& witness);

// The built-in worked-example context: eight-element lattice, meet overlap,
// join grouping, their derived implicators, the printed involutive negator,
// the three-member partition, and a one-member constant-top second partition
// as the refinement target.
LawContext default_law_context();

} // namespace lft
