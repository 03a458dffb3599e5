#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lft/connectives.hpp"
#include "lft/lattice.hpp"

namespace lft {

// Finite universe of named points. Points are identified by index; labels
// exist for display and file formats. Two universes are interchangeable when
// they list the same labels in the same order.
class Universe {
public:
    static std::shared_ptr<const Universe> make(std::string name,
                                                std::vector<std::string> points);

    const std::string& name() const { return name_; }
    std::size_t size() const { return points_.size(); }
    const std::string& point(std::size_t i) const { return points_.at(i); }
    const std::vector<std::string>& points() const { return points_; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    bool same_as(const Universe& other) const {
        return this == &other || points_ == other.points_;
    }

private:
    Universe(std::string name, std::vector<std::string> points)
        : name_(std::move(name)), points_(std::move(points)) {}
    std::string name_;
    std::vector<std::string> points_;
};

// Map from a universe into a lattice carrier, stored densely by point index.
class LFuzzySet {
public:
    LFuzzySet(std::shared_ptr<const Universe> universe,
              std::shared_ptr<const Lattice> lattice,
              std::vector<Elem> values);

    static LFuzzySet constant(std::shared_ptr<const Universe> u,
                              std::shared_ptr<const Lattice> lat, Elem value);

    const Universe& universe() const { return *universe_; }
    std::shared_ptr<const Universe> universe_ptr() const { return universe_; }
    const Lattice& lattice() const { return *lattice_; }
    std::shared_ptr<const Lattice> lattice_ptr() const { return lattice_; }

    std::size_t size() const { return values_.size(); }
    Elem at(std::size_t i) const { return values_.at(i); }
    void set(std::size_t i, Elem v);
    const std::vector<Elem>& values() const { return values_; }

    // Pointwise negation.
    LFuzzySet map(const Negator& n) const;

    // Pointwise order and equality under the carrier's comparisons.
    bool leq(const LFuzzySet& other) const;
    bool equal(const LFuzzySet& other) const;

    // Pointwise lattice operations.
    static LFuzzySet join(const LFuzzySet& a, const LFuzzySet& b);
    static LFuzzySet meet(const LFuzzySet& a, const LFuzzySet& b);

    // Pointwise connective application: combine(c, a, b)(x) = c(a(x), b(x)).
    static LFuzzySet combine(const BinaryConnective& c, const LFuzzySet& a, const LFuzzySet& b);
    // One argument held constant: c(u, f(x)) and c(f(x), u).
    static LFuzzySet combine_left(const BinaryConnective& c, Elem u, const LFuzzySet& f);
    static LFuzzySet combine_right(const BinaryConnective& c, const LFuzzySet& f, Elem u);

private:
    std::shared_ptr<const Universe> universe_;
    std::shared_ptr<const Lattice> lattice_;
    std::vector<Elem> values_;
};

// Indicator of one point: top there, bottom everywhere else.
LFuzzySet characteristic_set(std::shared_ptr<const Universe> u,
                             std::shared_ptr<const Lattice> lat, std::size_t point);

// Deterministic family of test sets over (lat, u). When the carrier is finite
// and |L|^|X| fits within `budget`, every map is produced in lexicographic
// order (the first point varies slowest); otherwise exactly `budget` seeded
// pseudo-random maps are drawn. `exhaustive`, when non-null, reports which of
// the two happened.
std::vector<LFuzzySet> enumerate_fuzzy_sets(std::shared_ptr<const Lattice> lat,
                                            std::shared_ptr<const Universe> u,
                                            std::size_t budget,
                                            std::uint64_t seed,
                                            bool* exhaustive = nullptr);

// Throws CarrierMismatchError unless both sets live on the same universe and
// carrier.
void require_compatible(const LFuzzySet& a, const LFuzzySet& b);

} // namespace lft
