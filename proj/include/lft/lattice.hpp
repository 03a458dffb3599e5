#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lft/errors.hpp"

namespace lft {

class Lattice;

// Handle to one element of one carrier. For a finite table lattice `raw`
// holds the element index (exact in a double for any realistic size); for the
// unit interval it holds the value itself. Handles remember their carrier so
// cross-carrier use is caught at the point of the offending operation.
struct Elem {
    double raw = 0.0;
    const Lattice* carrier = nullptr;
};

// Fold policy for join/meet over a (possibly empty) family. `Strict` raises
// EmptyFamilyError on an empty family; `Identity` returns the fold identity
// (bottom for join, top for meet).
enum class EmptyFold { Strict, Identity };

// A complete lattice: carrier plus join/meet/order and the bounds. Two
// implementations exist — finite lattices backed by tables, and the unit
// interval with min/max and an epsilon for equality of computed reals.
class Lattice {
public:
    virtual ~Lattice() = default;

    virtual std::string name() const = 0;
    virtual bool finite() const = 0;

    // Number of elements; only meaningful when finite().
    virtual std::size_t size() const = 0;
    // i-th element in declaration order; only valid when finite().
    virtual Elem element(std::size_t i) const = 0;

    virtual Elem bottom() const = 0;
    virtual Elem top() const = 0;

    virtual bool leq(Elem a, Elem b) const = 0;
    virtual bool equal(Elem a, Elem b) const = 0;
    virtual Elem join(Elem a, Elem b) const = 0;
    virtual Elem meet(Elem a, Elem b) const = 0;

    virtual std::string label(Elem a) const = 0;
    // Turns a textual label back into an element; nullopt when unknown.
    virtual std::optional<Elem> parse(const std::string& text) const = 0;

    // All elements in declaration order; only valid when finite().
    std::vector<Elem> all_elements() const;

    // Join/meet over arbitrary finite families. Result is invariant under
    // permutation and duplication of the family (associativity/commutativity/
    // idempotence are verified at construction for table lattices).
    Elem join_of(std::span<const Elem> family, EmptyFold policy = EmptyFold::Strict) const;
    Elem meet_of(std::span<const Elem> family, EmptyFold policy = EmptyFold::Strict) const;

    // Throws CarrierMismatchError unless `e` belongs to this lattice.
    void require_member(Elem e, const char* what = "element") const;

    bool lt(Elem a, Elem b) const { return leq(a, b) && !equal(a, b); }

    Lattice() = default;
    Lattice(const Lattice&) = delete;
    Lattice& operator=(const Lattice&) = delete;
};

// Finite lattice built from labels and an order generated by edge pairs.
// Construction computes the order closure, rejects cycles and missing bounds,
// fills join/meet tables from unique pairwise lubs/glbs, and verifies the
// lattice identities (idempotence, commutativity, associativity, absorption)
// plus completeness over every subset (exhaustively for small carriers,
// sampled above that).
class TableLattice final : public Lattice {
public:
    // `edges` lists pairs (lower, upper) by label; they may be cover pairs or
    // any generating relation — the closure is taken either way.
    static std::shared_ptr<const TableLattice> from_covers(
        std::string name,
        std::vector<std::string> labels,
        const std::vector<std::pair<std::string, std::string>>& edges);

    std::string name() const override { return name_; }
    bool finite() const override { return true; }
    std::size_t size() const override { return labels_.size(); }
    Elem element(std::size_t i) const override;
    Elem bottom() const override { return element(bottom_); }
    Elem top() const override { return element(top_); }
    bool leq(Elem a, Elem b) const override;
    bool equal(Elem a, Elem b) const override;
    Elem join(Elem a, Elem b) const override;
    Elem meet(Elem a, Elem b) const override;
    std::string label(Elem a) const override;
    std::optional<Elem> parse(const std::string& text) const override;

    std::size_t index_of(Elem e) const;
    const std::vector<std::string>& labels() const { return labels_; }

    // Cover pairs (a ⋖ b) of the order as index pairs, sorted; this is the
    // transitive reduction regardless of which generating edges were given.
    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

    // Order-dual lattice over the same labels: x ≤ y here iff y ≤ x there.
    std::shared_ptr<const TableLattice> dual(const std::string& dual_name) const;

    // True when the order is total.
    bool is_chain() const;

private:
    TableLattice() = default;
    bool leq_idx(std::size_t a, std::size_t b) const { return leq_[a * labels_.size() + b] != 0; }

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<unsigned char> leq_;       // row-major |L| x |L|
    std::vector<std::size_t> join_table_;  // row-major |L| x |L|
    std::vector<std::size_t> meet_table_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
};

// The unit interval [0,1] with join = max, meet = min. Equality of computed
// values is |a-b| <= epsilon; the order check inherits the same tolerance.
class UnitIntervalLattice final : public Lattice {
public:
    static std::shared_ptr<const UnitIntervalLattice> make(double epsilon = 1e-9);

    std::string name() const override { return "unit"; }
    bool finite() const override { return false; }
    std::size_t size() const override;
    Elem element(std::size_t i) const override;
    Elem bottom() const override { return Elem{0.0, this}; }
    Elem top() const override { return Elem{1.0, this}; }
    bool leq(Elem a, Elem b) const override;
    bool equal(Elem a, Elem b) const override;
    Elem join(Elem a, Elem b) const override;
    Elem meet(Elem a, Elem b) const override;
    std::string label(Elem a) const override;
    std::optional<Elem> parse(const std::string& text) const override;

    double epsilon() const { return epsilon_; }
    Elem value(double v) const;

    // Uniform sample grid with `points` values from 0 to 1 inclusive.
    std::vector<Elem> grid(std::size_t points) const;

private:
    explicit UnitIntervalLattice(double epsilon) : epsilon_(epsilon) {}
    double epsilon_;
};

// Builtin carriers used by tests, the worked example, and the CLI.
// chain_lattice(n): total order 0 < 1 < ... < n-1 with numeric labels.
std::shared_ptr<const TableLattice> chain_lattice(std::size_t n);
// square_lattice(): the 2x2 product of two-element chains; elements
// 00 < {01, 10} < 11 with the two middle elements incomparable.
std::shared_ptr<const TableLattice> square_lattice();

// Formats a real with the shortest representation that round-trips exactly.
std::string format_real(double v);

// Index of `e` within a finite carrier's element order; rejects non-members
// and non-finite carriers.
std::size_t finite_index(const Lattice& lat, Elem e);

} // namespace lft
