#include "lft/fuzzy.hpp"

#include <random>
#include <stdexcept>

namespace lft {

std::shared_ptr<const Universe> Universe::make(std::string name,
                                               std::vector<std::string> points) {
    if (points.empty()) throw std::invalid_argument("universe '" + name + "' has no points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].empty())
            throw std::invalid_argument("universe '" + name + "': empty point label");
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("universe '" + name + "': duplicate point '" +
                                            points[i] + "'");
    }
    return std::shared_ptr<const Universe>(new Universe(std::move(name), std::move(points)));
}

std::optional<std::size_t> Universe::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == label) return i;
    return std::nullopt;
}

LFuzzySet::LFuzzySet(std::shared_ptr<const Universe> universe,
                     std::shared_ptr<const Lattice> lattice,
                     std::vector<Elem> values)
    : universe_(std::move(universe)), lattice_(std::move(lattice)), values_(std::move(values)) {
    if (values_.size() != universe_->size())
        throw std::invalid_argument("fuzzy set over '" + universe_->name() + "' has " +
                                    std::to_string(values_.size()) + " values for " +
                                    std::to_string(universe_->size()) + " points");
    for (Elem v : values_) lattice_->require_member(v, "membership value");
}

LFuzzySet LFuzzySet::constant(std::shared_ptr<const Universe> u,
                              std::shared_ptr<const Lattice> lat, Elem value) {
    lat->require_member(value, "constant value");
    std::vector<Elem> values(u->size(), value);
    return LFuzzySet(std::move(u), std::move(lat), std::move(values));
}

void LFuzzySet::set(std::size_t i, Elem v) {
    lattice_->require_member(v, "membership value");
    values_.at(i) = v;
}

LFuzzySet LFuzzySet::map(const Negator& n) const {
    if (&n.lattice() != lattice_.get())
        throw CarrierMismatchError("negator on '" + n.lattice().name() +
                                   "' applied to a set on '" + lattice_->name() + "'");
    std::vector<Elem> out;
    out.reserve(values_.size());
    for (Elem v : values_) out.push_back(n.apply(v));
    return LFuzzySet(universe_, lattice_, std::move(out));
}

bool LFuzzySet::leq(const LFuzzySet& other) const {
    require_compatible(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!lattice_->leq(values_[i], other.values_[i])) return false;
    return true;
}

bool LFuzzySet::equal(const LFuzzySet& other) const {
    require_compatible(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!lattice_->equal(values_[i], other.values_[i])) return false;
    return true;
}

LFuzzySet LFuzzySet::join(const LFuzzySet& a, const LFuzzySet& b) {
    require_compatible(a, b);
    std::vector<Elem> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a.lattice().join(a.at(i), b.at(i)));
    return LFuzzySet(a.universe_, a.lattice_, std::move(out));
}

LFuzzySet LFuzzySet::meet(const LFuzzySet& a, const LFuzzySet& b) {
    require_compatible(a, b);
    std::vector<Elem> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a.lattice().meet(a.at(i), b.at(i)));
    return LFuzzySet(a.universe_, a.lattice_, std::move(out));
}

LFuzzySet LFuzzySet::combine(const BinaryConnective& c, const LFuzzySet& a, const LFuzzySet& b) {
    require_compatible(a, b);
    if (&c.lattice() != &a.lattice())
        throw CarrierMismatchError("connective carrier differs from the sets' carrier");
    std::vector<Elem> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(c.apply(a.at(i), b.at(i)));
    return LFuzzySet(a.universe_, a.lattice_, std::move(out));
}

LFuzzySet LFuzzySet::combine_left(const BinaryConnective& c, Elem u, const LFuzzySet& f) {
    if (&c.lattice() != &f.lattice())
        throw CarrierMismatchError("connective carrier differs from the set's carrier");
    std::vector<Elem> out;
    out.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(c.apply(u, f.at(i)));
    return LFuzzySet(f.universe_ptr(), f.lattice_ptr(), std::move(out));
}

LFuzzySet LFuzzySet::combine_right(const BinaryConnective& c, const LFuzzySet& f, Elem u) {
    if (&c.lattice() != &f.lattice())
        throw CarrierMismatchError("connective carrier differs from the set's carrier");
    std::vector<Elem> out;
    out.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(c.apply(f.at(i), u));
    return LFuzzySet(f.universe_ptr(), f.lattice_ptr(), std::move(out));
}

LFuzzySet characteristic_set(std::shared_ptr<const Universe> u,
                             std::shared_ptr<const Lattice> lat, std::size_t point) {
    if (point >= u->size())
        throw UnknownPointError("universe '" + u->name() + "' has no point #" +
                                std::to_string(point));
    std::vector<Elem> values(u->size(), lat->bottom());
    values[point] = lat->top();
    return LFuzzySet(std::move(u), std::move(lat), std::move(values));
}

std::vector<LFuzzySet> enumerate_fuzzy_sets(std::shared_ptr<const Lattice> lat,
                                            std::shared_ptr<const Universe> u,
                                            std::size_t budget,
                                            std::uint64_t seed,
                                            bool* exhaustive) {
    const std::size_t n = u->size();
    std::vector<LFuzzySet> out;
    if (lat->finite()) {
        const std::size_t m = lat->size();
        std::size_t total = 1;
        bool fits = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (total > budget / m) { fits = false; break; } // m^n would exceed budget
            total *= m;
        }
        if (fits) {
            if (exhaustive) *exhaustive = true;
            std::vector<std::size_t> idx(n, 0);
            out.reserve(total);
            for (std::size_t c = 0; c < total; ++c) {
                std::vector<Elem> vals;
                vals.reserve(n);
                for (std::size_t i = 0; i < n; ++i) vals.push_back(lat->element(idx[i]));
                out.emplace_back(u, lat, std::move(vals));
                for (std::size_t i = n; i-- > 0;) {
                    if (++idx[i] < m) break;
                    idx[i] = 0;
                }
            }
            return out;
        }
        if (exhaustive) *exhaustive = false;
        std::mt19937_64 rng(seed);
        out.reserve(budget);
        for (std::size_t c = 0; c < budget; ++c) {
            std::vector<Elem> vals;
            vals.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                vals.push_back(lat->element(static_cast<std::size_t>(rng() % m)));
            out.emplace_back(u, lat, std::move(vals));
        }
        return out;
    }
    if (exhaustive) *exhaustive = false;
    std::mt19937_64 rng(seed);
    out.reserve(budget);
    for (std::size_t c = 0; c < budget; ++c) {
        std::vector<Elem> vals;
        vals.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double v = static_cast<double>(rng() >> 11) *
                             (1.0 / 9007199254740992.0); // uniform in [0,1)
            vals.push_back(Elem{v, lat.get()});
        }
        out.emplace_back(u, lat, std::move(vals));
    }
    return out;
}

void require_compatible(const LFuzzySet& a, const LFuzzySet& b) {
    if (&a.lattice() != &b.lattice())
        throw CarrierMismatchError("sets live on different carriers ('" + a.lattice().name() +
                                   "' vs '" + b.lattice().name() + "')");
    if (!a.universe().same_as(b.universe()))
        throw CarrierMismatchError("sets live on different universes ('" + a.universe().name() +
                                   "' vs '" + b.universe().name() + "')");
}

} // namespace lft
