#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lft/fuzzy.hpp"

namespace lft {

// Validated family of fuzzy sets over one universe: every member reaches top
// somewhere (normality), the core sets (points where a member equals top) are
// pairwise disjoint, and together they cover the universe. The induced index
// map sends each point to the unique member whose core contains it.
class LFuzzyPartition {
public:
    // Validates and assembles; throws NotNormalError, CoresOverlapError or
    // CoresDontCoverError with a witness in the message. Member labels must
    // be distinct and nonempty; members must share universe and carrier.
    static LFuzzyPartition validate(std::vector<std::string> labels,
                                    std::vector<LFuzzySet> members);

    std::size_t size() const { return members_.size(); }
    const LFuzzySet& member(std::size_t j) const { return members_.at(j); }
    const std::string& label(std::size_t j) const { return labels_.at(j); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    // Point indices of member j's core, ascending.
    const std::vector<std::size_t>& core(std::size_t j) const { return cores_.at(j); }
    // The unique member whose core contains point x.
    std::size_t member_of_point(std::size_t x) const { return point_to_member_.at(x); }

    const Universe& universe() const { return members_.front().universe(); }
    std::shared_ptr<const Universe> universe_ptr() const { return members_.front().universe_ptr(); }
    const Lattice& lattice() const { return members_.front().lattice(); }
    std::shared_ptr<const Lattice> lattice_ptr() const { return members_.front().lattice_ptr(); }

private:
    LFuzzyPartition() = default;
    std::vector<std::string> labels_;
    std::vector<LFuzzySet> members_;
    std::vector<std::vector<std::size_t>> cores_;
    std::vector<std::size_t> point_to_member_;
};

// Contiguous index blocks of equal length n/blocks with the remainder going
// to the last block; one member per block, top on the block. Off-block values
// are bottom, except on the unit interval when `width` is given: there the
// value decays with index distance d to the block as max(0, 1 − d/width).
// Throws BlocksInvalidError for a bad block count, a non-positive width, or a
// width requested on a finite carrier.
LFuzzyPartition block_partition(std::shared_ptr<const Universe> u,
                                std::shared_ptr<const Lattice> lat,
                                std::size_t blocks,
                                std::optional<double> width = std::nullopt);

} // namespace lft
