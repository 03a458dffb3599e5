#include "lft/worked_example.hpp"

#include <array>
#include <utility>

#include "lft/transforms.hpp"

namespace lft {
namespace {

const std::vector<std::string>& element_labels() {
    static const std::vector<std::string> labels = {"0", "p", "q", "r",
                                                    "s", "t", "u", "1"};
    return labels;
}

// All labels handled here are fixed constants of the example, so a failed
// parse is a programming error; value() makes that loud.
Elem el(const Lattice& lat, const std::string& text) {
    return lat.parse(text).value();
}

} // namespace

std::shared_ptr<const TableLattice> example8_lattice() {
    static const std::shared_ptr<const TableLattice> lat = TableLattice::from_covers(
        "example8", element_labels(),
        {{"0", "p"},
         {"p", "q"},
         {"p", "r"},
         {"q", "s"},
         {"r", "s"},
         {"r", "t"},
         {"s", "u"},
         {"t", "u"},
         {"u", "1"}});
    return lat;
}

Negator example8_negator(const std::shared_ptr<const Lattice>& lat) {
    // 0<->1, p<->u, q<->t, r<->s: an involution that reverses the order.
    // Images listed in element order (0, p, q, r, s, t, u, 1).
    const std::array<const char*, 8> images = {"1", "u", "t", "s",
                                               "r", "q", "p", "0"};
    std::vector<Elem> image;
    image.reserve(images.size());
    for (const char* to : images) image.push_back(el(*lat, to));
    return Negator::from_table(lat, std::move(image), "example8-negator");
}

std::shared_ptr<const Universe> example8_universe() {
    static const std::shared_ptr<const Universe> u =
        Universe::make("example8-universe", {"x1", "x2", "x3"});
    return u;
}

LFuzzyPartition example8_partition(const std::shared_ptr<const Lattice>& lat) {
    auto u = example8_universe();
    auto member = [&](const char* a, const char* b, const char* c) {
        return LFuzzySet(u, lat, {el(*lat, a), el(*lat, b), el(*lat, c)});
    };
    return LFuzzyPartition::validate(
        {"A1", "A2", "A3"},
        {member("1", "p", "q"), member("s", "1", "u"), member("s", "p", "1")});
}

LFuzzySet example8_input(const std::shared_ptr<const Lattice>& lat) {
    auto u = example8_universe();
    return LFuzzySet(u, lat, {el(*lat, "p"), el(*lat, "q"), el(*lat, "u")});
}

bool ReplayResult::as_published() const {
    std::vector<std::string> mismatched;
    for (const auto& row : rows) {
        if (!row.match) mismatched.push_back(row.id);
    }
    return mismatched == known_deviations;
}

ReplayResult replay_worked_example() {
    auto lat = std::static_pointer_cast<const Lattice>(example8_lattice());
    auto neg = example8_negator(lat);
    auto partition = example8_partition(lat);
    auto f = example8_input(lat);

    auto theta = BinaryConnective::meet_overlap(lat);
    auto eta = BinaryConnective::join_grouping(lat);
    auto i_eta = BinaryConnective::threshold_coresidual(lat);
    auto i_theta = derive_residual(theta);

    struct DirectSpec {
        DirectKind kind;
        const BinaryConnective* conn;
        const Negator* neg;
        std::array<const char*, 3> published;
    };
    const std::array<DirectSpec, 4> direct_specs = {{
        {DirectKind::UpperTheta, &theta, nullptr, {"q", "u", "u"}},
        {DirectKind::LowerEta, &eta, &neg, {"p", "r", "r"}},
        {DirectKind::UpperCoResidual, &i_eta, &neg, {"u", "r", "u"}},
        {DirectKind::LowerResidual, &i_theta, nullptr, {"p", "p", "p"}},
    }};
    struct InverseSpec {
        InverseKind kind;
        const BinaryConnective* conn;
        const Negator* neg;
        std::array<const char*, 3> published;
    };
    // Reconstructions in the source tables start from the *published* direct
    // components of the paired direct transform (see direct_specs above).
    const std::array<InverseSpec, 4> inverse_specs = {{
        {InverseKind::UpperResidual, &i_theta, nullptr, {"q", "u", "u"}},
        {InverseKind::LowerTheta, &theta, nullptr, {"p", "p", "p"}},
        {InverseKind::UpperEta, &eta, &neg, {"r", "r", "r"}},
        {InverseKind::LowerCoResidual, &i_eta, &neg, {"0", "u", "t"}},
    }};

    ReplayResult result;
    result.known_deviations = {"direct lower-eta A2"};

    for (const auto& spec : direct_specs) {
        DirectResult computed =
            direct_transform(spec.kind, partition, *spec.conn, spec.neg, f);
        for (std::size_t j = 0; j < partition.size(); ++j) {
            ReplayRow row;
            row.id = std::string("direct ") + to_string(spec.kind) + " " +
                     partition.label(j);
            row.published = spec.published[j];
            row.computed = lat->label(computed.components[j]);
            row.match = lat->equal(computed.components[j], el(*lat, row.published));
            result.rows.push_back(std::move(row));
        }
    }

    for (const auto& spec : inverse_specs) {
        const DirectKind source_kind = paired_direct(spec.kind);
        const DirectSpec* source = nullptr;
        for (const auto& candidate : direct_specs) {
            if (candidate.kind == source_kind) source = &candidate;
        }
        DirectResult published_components;
        published_components.kind = source->kind;
        published_components.member_labels = {"A1", "A2", "A3"};
        published_components.lattice = lat;
        for (const char* label : source->published) {
            published_components.components.push_back(el(*lat, label));
        }
        LFuzzySet computed = inverse_transform(spec.kind, partition, *spec.conn,
                                               spec.neg, published_components);
        for (std::size_t x = 0; x < computed.universe().size(); ++x) {
            ReplayRow row;
            row.id = std::string("inverse ") + to_string(spec.kind) + " " +
                     computed.universe().point(x);
            row.published = spec.published[x];
            row.computed = lat->label(computed.at(x));
            row.match = lat->equal(computed.at(x), el(*lat, row.published));
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

} // namespace lft
