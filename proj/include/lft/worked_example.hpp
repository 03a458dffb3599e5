#pragma once

// Built-in worked example: an eight-element lattice, an involutive negator,
// a three-point universe with a three-member fuzzy partition, and a sample
// input set, together with the published result tables for all four direct
// transforms and all four reconstructions.  replay_worked_example() recomputes
// every value and reports, row by row, whether it matches the published one.

#include <memory>
#include <string>
#include <vector>

#include "lft/connectives.hpp"
#include "lft/fuzzy.hpp"
#include "lft/lattice.hpp"
#include "lft/partition.hpp"

namespace lft {

// Eight elements {0, p, q, r, s, t, u, 1} ordered by the covers
// 0<p, p<q, p<r, q<s, r<s, r<t, s<u, t<u, u<1.  Registered under the
// builtin name "example8".
std::shared_ptr<const TableLattice> example8_lattice();

// The involutive negator used throughout the example:
// 0<->1, p<->u, q<->t, r<->s.
Negator example8_negator(const std::shared_ptr<const Lattice>& lat);

// Universe {x1, x2, x3}.
std::shared_ptr<const Universe> example8_universe();

// Partition members A1 = (1, p, q), A2 = (s, 1, u), A3 = (s, p, 1).
LFuzzyPartition example8_partition(const std::shared_ptr<const Lattice>& lat);

// Sample input f = (p, q, u).
LFuzzySet example8_input(const std::shared_ptr<const Lattice>& lat);

struct ReplayRow {
    std::string id;         // e.g. "direct upper-theta A1", "inverse lower-theta x2"
    std::string published;  // value printed in the worked example
    std::string computed;   // value recomputed here
    bool match = false;
};

struct ReplayResult {
    std::vector<ReplayRow> rows;                // 12 direct + 12 inverse rows
    std::vector<std::string> known_deviations;  // row ids expected to differ
    // True iff the mismatching row ids are exactly the known deviations.
    bool as_published() const;
};

// Recomputes the example end to end.  Direct rows compare recomputed
// components against the published tables; inverse rows feed the *published*
// direct components through each reconstruction, as the source tables do.
ReplayResult replay_worked_example();

} // namespace lft
