#include "lft/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace lft {

std::string format_real(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) return "0";
    return std::string(buf, end);
}

std::size_t finite_index(const Lattice& lat, Elem e) {
    lat.require_member(e);
    if (!lat.finite())
        throw std::logic_error("carrier '" + lat.name() + "' has no element indexing");
    auto i = static_cast<std::size_t>(e.raw);
    if (static_cast<double>(i) != e.raw || i >= lat.size())
        throw std::out_of_range("carrier '" + lat.name() + "': corrupt element handle");
    return i;
}

// ---------------------------------------------------------------- Lattice

std::vector<Elem> Lattice::all_elements() const {
    std::vector<Elem> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i));
    return out;
}

Elem Lattice::join_of(std::span<const Elem> family, EmptyFold policy) const {
    if (family.empty()) {
        if (policy == EmptyFold::Strict)
            throw EmptyFamilyError("join over an empty family (strict fold policy)");
        return bottom();
    }
    Elem acc = family[0];
    for (std::size_t i = 1; i < family.size(); ++i) acc = join(acc, family[i]);
    return acc;
}

Elem Lattice::meet_of(std::span<const Elem> family, EmptyFold policy) const {
    if (family.empty()) {
        if (policy == EmptyFold::Strict)
            throw EmptyFamilyError("meet over an empty family (strict fold policy)");
        return top();
    }
    Elem acc = family[0];
    for (std::size_t i = 1; i < family.size(); ++i) acc = meet(acc, family[i]);
    return acc;
}

void Lattice::require_member(Elem e, const char* what) const {
    if (e.carrier != this) {
        std::string other = e.carrier ? e.carrier->name() : "<none>";
        throw CarrierMismatchError(std::string(what) + " belongs to carrier '" + other +
                                   "', expected '" + name() + "'");
    }
}

// ----------------------------------------------------------- TableLattice

namespace {

// Least element of `candidates` under `leq_idx`, or nullopt when no candidate
// is below all others (i.e. the bound is missing or not unique).
std::optional<std::size_t> least_of(const std::vector<std::size_t>& candidates,
                                    const std::vector<unsigned char>& leq,
                                    std::size_t n) {
    for (std::size_t m : candidates) {
        bool below_all = true;
        for (std::size_t c : candidates) {
            if (!leq[m * n + c]) { below_all = false; break; }
        }
        if (below_all) return m;
    }
    return std::nullopt;
}

std::optional<std::size_t> greatest_of(const std::vector<std::size_t>& candidates,
                                       const std::vector<unsigned char>& leq,
                                       std::size_t n) {
    for (std::size_t m : candidates) {
        bool above_all = true;
        for (std::size_t c : candidates) {
            if (!leq[c * n + m]) { above_all = false; break; }
        }
        if (above_all) return m;
    }
    return std::nullopt;
}

} // namespace

std::shared_ptr<const TableLattice> TableLattice::from_covers(
    std::string name,
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
    if (labels.empty())
        throw std::invalid_argument("lattice '" + name + "': no elements given");

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty())
            throw std::invalid_argument("lattice '" + name + "': empty element label");
        if (!index.emplace(labels[i], i).second)
            throw std::invalid_argument("lattice '" + name + "': duplicate label '" + labels[i] + "'");
    }

    const std::size_t n = labels.size();
    auto lat = std::shared_ptr<TableLattice>(new TableLattice());
    lat->name_ = std::move(name);
    lat->labels_ = std::move(labels);

    // Reflexive-transitive closure of the edge relation.
    std::vector<unsigned char> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (const auto& [lo, hi] : edges) {
        auto a = index.find(lo);
        auto b = index.find(hi);
        if (a == index.end())
            throw std::invalid_argument("lattice '" + lat->name_ + "': edge uses unknown label '" + lo + "'");
        if (b == index.end())
            throw std::invalid_argument("lattice '" + lat->name_ + "': edge uses unknown label '" + hi + "'");
        leq[a->second * n + b->second] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!leq[i * n + k]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (leq[k * n + j]) leq[i * n + j] = 1;
        }

    // A cycle shows up as two distinct elements below each other.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (leq[i * n + j] && leq[j * n + i])
                throw CyclicOrderError("lattice '" + lat->name_ + "': elements '" + lat->labels_[i] +
                                       "' and '" + lat->labels_[j] + "' lie on a cycle");
    lat->leq_ = leq;

    // Unique least upper bound / greatest lower bound for every pair.
    lat->join_table_.assign(n * n, 0);
    lat->meet_table_.assign(n * n, 0);
    std::vector<std::size_t> bounds;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            bounds.clear();
            for (std::size_t c = 0; c < n; ++c)
                if (leq[a * n + c] && leq[b * n + c]) bounds.push_back(c);
            auto lub = least_of(bounds, leq, n);
            if (!lub)
                throw NotALatticeError("lattice '" + lat->name_ + "': pair {" + lat->labels_[a] +
                                       ", " + lat->labels_[b] + "} has no least upper bound");
            bounds.clear();
            for (std::size_t c = 0; c < n; ++c)
                if (leq[c * n + a] && leq[c * n + b]) bounds.push_back(c);
            auto glb = greatest_of(bounds, leq, n);
            if (!glb)
                throw NotALatticeError("lattice '" + lat->name_ + "': pair {" + lat->labels_[a] +
                                       ", " + lat->labels_[b] + "} has no greatest lower bound");
            lat->join_table_[a * n + b] = lat->join_table_[b * n + a] = *lub;
            lat->meet_table_[a * n + b] = lat->meet_table_[b * n + a] = *glb;
        }
    }

    // Global bounds exist once every pair folds; locate and verify them.
    std::size_t bot = 0, top = 0;
    for (std::size_t i = 1; i < n; ++i) {
        bot = lat->meet_table_[bot * n + i];
        top = lat->join_table_[top * n + i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq[bot * n + i])
            throw NotALatticeError("lattice '" + lat->name_ + "': no bottom element");
        if (!leq[i * n + top])
            throw NotALatticeError("lattice '" + lat->name_ + "': no top element");
    }
    lat->bottom_ = bot;
    lat->top_ = top;

    // Verify the lattice identities explicitly. Idempotence, commutativity
    // and absorption over all pairs; associativity over all triples for small
    // carriers, over a fixed-seed sample above that.
    auto jt = [&](std::size_t a, std::size_t b) { return lat->join_table_[a * n + b]; };
    auto mt = [&](std::size_t a, std::size_t b) { return lat->meet_table_[a * n + b]; };
    for (std::size_t a = 0; a < n; ++a) {
        if (jt(a, a) != a || mt(a, a) != a)
            throw NotALatticeError("lattice '" + lat->name_ + "': idempotence fails at '" +
                                   lat->labels_[a] + "'");
        for (std::size_t b = 0; b < n; ++b) {
            if (jt(a, b) != jt(b, a) || mt(a, b) != mt(b, a))
                throw NotALatticeError("lattice '" + lat->name_ + "': commutativity fails at {" +
                                       lat->labels_[a] + ", " + lat->labels_[b] + "}");
            if (mt(a, jt(a, b)) != a || jt(a, mt(a, b)) != a)
                throw NotALatticeError("lattice '" + lat->name_ + "': absorption fails at {" +
                                       lat->labels_[a] + ", " + lat->labels_[b] + "}");
            bool aleb = leq[a * n + b] != 0;
            if (aleb != (jt(a, b) == b) || aleb != (mt(a, b) == a))
                throw NotALatticeError("lattice '" + lat->name_ + "': order/operation consistency fails at {" +
                                       lat->labels_[a] + ", " + lat->labels_[b] + "}");
        }
    }
    auto check_assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
        if (jt(a, jt(b, c)) != jt(jt(a, b), c) || mt(a, mt(b, c)) != mt(mt(a, b), c))
            throw NotALatticeError("lattice '" + lat->name_ + "': associativity fails at {" +
                                   lat->labels_[a] + ", " + lat->labels_[b] + ", " +
                                   lat->labels_[c] + "}");
    };
    if (n <= 64) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) check_assoc(a, b, c);
    } else {
        std::mt19937_64 rng(0x1a77u);
        for (int t = 0; t < 4096; ++t)
            check_assoc(rng() % n, rng() % n, rng() % n);
    }

    // Completeness beyond pairs: in a finite lattice pairwise bounds imply
    // bounds for every subset; verify that the folded value really is the
    // least/greatest bound, exhaustively when 2^n is small, sampled otherwise.
    auto check_subset = [&](const std::vector<std::size_t>& subset) {
        std::size_t j = subset[0], m = subset[0];
        for (std::size_t i = 1; i < subset.size(); ++i) {
            j = jt(j, subset[i]);
            m = mt(m, subset[i]);
        }
        for (std::size_t c = 0; c < n; ++c) {
            bool upper = true, lower = true;
            for (std::size_t s : subset) {
                if (!leq[s * n + c]) upper = false;
                if (!leq[c * n + s]) lower = false;
            }
            if (upper && !leq[j * n + c])
                throw NotALatticeError("lattice '" + lat->name_ + "': subset join is not least");
            if (lower && !leq[c * n + m])
                throw NotALatticeError("lattice '" + lat->name_ + "': subset meet is not greatest");
        }
    };
    if (n <= 12) {
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<std::size_t> subset;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) subset.push_back(i);
            check_subset(subset);
        }
    } else {
        std::mt19937_64 rng(0x1a77u);
        for (int t = 0; t < 2048; ++t) {
            std::vector<std::size_t> subset;
            std::size_t len = 1 + rng() % n;
            for (std::size_t i = 0; i < len; ++i) subset.push_back(rng() % n);
            check_subset(subset);
        }
    }

    return lat;
}

Elem TableLattice::element(std::size_t i) const {
    if (i >= labels_.size())
        throw std::out_of_range("lattice '" + name_ + "': element index " + std::to_string(i));
    return Elem{static_cast<double>(i), this};
}

std::size_t TableLattice::index_of(Elem e) const {
    require_member(e);
    auto i = static_cast<std::size_t>(e.raw);
    if (static_cast<double>(i) != e.raw || i >= labels_.size())
        throw std::out_of_range("lattice '" + name_ + "': corrupt element handle");
    return i;
}

bool TableLattice::leq(Elem a, Elem b) const { return leq_idx(index_of(a), index_of(b)); }

bool TableLattice::equal(Elem a, Elem b) const { return index_of(a) == index_of(b); }

Elem TableLattice::join(Elem a, Elem b) const {
    return element(join_table_[index_of(a) * labels_.size() + index_of(b)]);
}

Elem TableLattice::meet(Elem a, Elem b) const {
    return element(meet_table_[index_of(a) * labels_.size() + index_of(b)]);
}

std::string TableLattice::label(Elem a) const { return labels_[index_of(a)]; }

std::optional<Elem> TableLattice::parse(const std::string& text) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == text) return element(i);
    return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> TableLattice::cover_pairs() const {
    const std::size_t n = labels_.size();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !leq_idx(a, b)) continue;
            bool direct = true;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (leq_idx(a, c) && leq_idx(c, b)) { direct = false; break; }
            }
            if (direct) covers.emplace_back(a, b);
        }
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

std::shared_ptr<const TableLattice> TableLattice::dual(const std::string& dual_name) const {
    std::vector<std::pair<std::string, std::string>> reversed;
    for (auto [a, b] : cover_pairs()) reversed.emplace_back(labels_[b], labels_[a]);
    return from_covers(dual_name, labels_, reversed);
}

bool TableLattice::is_chain() const {
    const std::size_t n = labels_.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!leq_idx(a, b) && !leq_idx(b, a)) return false;
    return true;
}

// ---------------------------------------------------- UnitIntervalLattice

std::shared_ptr<const UnitIntervalLattice> UnitIntervalLattice::make(double epsilon) {
    if (!(epsilon >= 0.0) || epsilon >= 0.5)
        throw std::invalid_argument("unit interval epsilon must lie in [0, 0.5)");
    return std::shared_ptr<const UnitIntervalLattice>(new UnitIntervalLattice(epsilon));
}

std::size_t UnitIntervalLattice::size() const {
    throw std::logic_error("unit interval carrier has no element count");
}

Elem UnitIntervalLattice::element(std::size_t) const {
    throw std::logic_error("unit interval carrier has no element enumeration");
}

bool UnitIntervalLattice::leq(Elem a, Elem b) const {
    require_member(a);
    require_member(b);
    return a.raw <= b.raw + epsilon_;
}

bool UnitIntervalLattice::equal(Elem a, Elem b) const {
    require_member(a);
    require_member(b);
    return std::fabs(a.raw - b.raw) <= epsilon_;
}

Elem UnitIntervalLattice::join(Elem a, Elem b) const {
    require_member(a);
    require_member(b);
    return Elem{std::max(a.raw, b.raw), this};
}

Elem UnitIntervalLattice::meet(Elem a, Elem b) const {
    require_member(a);
    require_member(b);
    return Elem{std::min(a.raw, b.raw), this};
}

std::string UnitIntervalLattice::label(Elem a) const {
    require_member(a);
    return format_real(a.raw);
}

std::optional<Elem> UnitIntervalLattice::parse(const std::string& text) const {
    if (text.empty()) return std::nullopt;
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) return std::nullopt;
    if (v < -epsilon_ || v > 1.0 + epsilon_) return std::nullopt;
    return value(std::clamp(v, 0.0, 1.0));
}

Elem UnitIntervalLattice::value(double v) const {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::out_of_range("unit interval value " + format_real(v) + " outside [0,1]");
    return Elem{v, this};
}

std::vector<Elem> UnitIntervalLattice::grid(std::size_t points) const {
    if (points < 2) throw std::invalid_argument("grid needs at least two points");
    std::vector<Elem> out;
    out.reserve(points);
    for (std::size_t i = 0; i < points; ++i)
        out.push_back(value(static_cast<double>(i) / static_cast<double>(points - 1)));
    return out;
}

// ----------------------------------------------------------------- builtins

std::shared_ptr<const TableLattice> chain_lattice(std::size_t n) {
    if (n == 0) throw std::invalid_argument("chain length must be positive");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(labels[i], labels[i + 1]);
    return TableLattice::from_covers("chain" + std::to_string(n), std::move(labels), edges);
}

std::shared_ptr<const TableLattice> square_lattice() {
    return TableLattice::from_covers(
        "square", {"00", "01", "10", "11"},
        {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
}

} // namespace lft
