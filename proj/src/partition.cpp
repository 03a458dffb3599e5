#include "lft/partition.hpp"

#include <algorithm>
#include <cmath>

namespace lft {

LFuzzyPartition LFuzzyPartition::validate(std::vector<std::string> labels,
                                          std::vector<LFuzzySet> members) {
    if (members.empty()) throw std::invalid_argument("partition needs at least one member");
    if (labels.size() != members.size())
        throw std::invalid_argument("partition has " + std::to_string(labels.size()) +
                                    " labels for " + std::to_string(members.size()) + " members");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty()) throw std::invalid_argument("empty partition member label");
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                throw std::invalid_argument("duplicate partition member label '" + labels[i] + "'");
    }
    for (std::size_t j = 1; j < members.size(); ++j) require_compatible(members[0], members[j]);

    const Lattice& lat = members[0].lattice();
    const Universe& uni = members[0].universe();
    const Elem top = lat.top();

    LFuzzyPartition p;
    p.cores_.resize(members.size());
    p.point_to_member_.assign(uni.size(), members.size());

    for (std::size_t j = 0; j < members.size(); ++j) {
        for (std::size_t x = 0; x < uni.size(); ++x) {
            if (!lat.equal(members[j].at(x), top)) continue;
            if (p.point_to_member_[x] != members.size())
                throw CoresOverlapError("cores of members '" + labels[p.point_to_member_[x]] +
                                        "' and '" + labels[j] + "' both contain point '" +
                                        uni.point(x) + "'");
            p.point_to_member_[x] = j;
            p.cores_[j].push_back(x);
        }
        if (p.cores_[j].empty())
            throw NotNormalError("member '" + labels[j] + "' never reaches top");
    }
    for (std::size_t x = 0; x < uni.size(); ++x)
        if (p.point_to_member_[x] == members.size())
            throw CoresDontCoverError("point '" + uni.point(x) + "' lies in no member core");

    p.labels_ = std::move(labels);
    p.members_ = std::move(members);
    return p;
}

std::optional<std::size_t> LFuzzyPartition::index_of(const std::string& label) const {
    for (std::size_t j = 0; j < labels_.size(); ++j)
        if (labels_[j] == label) return j;
    return std::nullopt;
}

LFuzzyPartition block_partition(std::shared_ptr<const Universe> u,
                                std::shared_ptr<const Lattice> lat,
                                std::size_t blocks,
                                std::optional<double> width) {
    const std::size_t n = u->size();
    if (blocks == 0 || blocks > n)
        throw BlocksInvalidError("cannot split " + std::to_string(n) + " points into " +
                                 std::to_string(blocks) + " blocks");
    const auto* unit = dynamic_cast<const UnitIntervalLattice*>(lat.get());
    if (width) {
        if (!unit)
            throw BlocksInvalidError("decay width is only available on the unit interval carrier");
        if (!(*width > 0.0))
            throw BlocksInvalidError("decay width must be positive");
    }

    std::vector<std::string> labels;
    std::vector<LFuzzySet> members;
    const std::size_t len = n / blocks;
    for (std::size_t b = 0; b < blocks; ++b) {
        std::size_t lo = b * len;
        std::size_t hi = b + 1 == blocks ? n : (b + 1) * len;
        std::vector<Elem> values(n, lat->bottom());
        for (std::size_t x = 0; x < n; ++x) {
            if (x >= lo && x < hi) {
                values[x] = lat->top();
            } else if (width) {
                std::size_t d = x < lo ? lo - x : x - hi + 1;
                double v = std::max(0.0, 1.0 - static_cast<double>(d) / *width);
                values[x] = unit->value(v);
            }
        }
        labels.push_back("b" + std::to_string(b));
        members.emplace_back(u, lat, std::move(values));
    }
    return LFuzzyPartition::validate(std::move(labels), std::move(members));
}

} // namespace lft
