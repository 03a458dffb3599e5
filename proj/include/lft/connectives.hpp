#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lft/lattice.hpp"

namespace lft {

// Role a binary connective plays. The role drives which axioms `validate_*`
// applies, which derivations are allowed, and how transforms wire it in.
enum class ConnectiveKind { Overlap, Grouping, ResidualImplicator, CoResidualImplicator };

std::string to_string(ConnectiveKind k);
std::optional<ConnectiveKind> connective_kind_from_string(const std::string& s);

// Evaluation strategy: an explicit table over a finite carrier, or one of the
// named closed forms (these also work on finite carriers where they only use
// order/join/meet).
enum class ConnectiveForm {
    Table,
    Meet,               // overlap: u ∧ v, any carrier
    Join,               // grouping: u ∨ v, any carrier
    Product,            // overlap on [0,1]: u·v
    ProbabilisticSum,   // grouping on [0,1]: u + v − u·v
    Godel,              // residual on [0,1]: 1 if u ≤ v else v
    Goguen,             // residual on [0,1]: 1 if u ≤ v else v/u
    DualGodel,          // co-residual on [0,1]: 0 if u ≥ v else v
    DualGoguen,         // co-residual on [0,1]: 0 if u ≥ v else (v−u)/(1−u)
    ThresholdResidual,  // any carrier: top if u ≤ v else v
    ThresholdCoResidual // any carrier: bottom if u ≤ v else u
};

std::string to_string(ConnectiveForm f);
std::optional<ConnectiveForm> connective_form_from_string(const std::string& s);

struct Violation {
    std::string axiom;                 // which requirement broke, e.g. "(v)"
    std::vector<std::string> witness;  // element labels, slot order fixed per axiom
    std::string detail;                // the failing instance, human readable

    friend bool operator<(const Violation& a, const Violation& b) {
        if (a.axiom != b.axiom) return a.axiom < b.axiom;
        if (a.witness != b.witness) return a.witness < b.witness;
        return a.detail < b.detail;
    }
    friend bool operator==(const Violation& a, const Violation& b) {
        return a.axiom == b.axiom && a.witness == b.witness && a.detail == b.detail;
    }
};

// Outcome of a validation run. `exhaustive` is false when any part of the
// case space was sampled (unit-interval grids, capped family checks); the
// notes say what was covered. Violations are sorted, so the report is
// deterministic no matter how the case space was traversed.
struct ValidationReport {
    std::string subject;
    bool passed = true;
    bool exhaustive = true;
    std::size_t cases_checked = 0;
    std::vector<Violation> violations;
    std::vector<std::pair<std::string, std::string>> facts; // name → value
    std::vector<std::string> notes;

    void add(Violation v) {
        passed = false;
        violations.push_back(std::move(v));
    }
    void finish();  // sort violations for deterministic emission
};

class BinaryConnective {
public:
    // Closed forms valid on any carrier.
    static BinaryConnective meet_overlap(std::shared_ptr<const Lattice> lat);
    static BinaryConnective join_grouping(std::shared_ptr<const Lattice> lat);
    static BinaryConnective threshold_residual(std::shared_ptr<const Lattice> lat);
    static BinaryConnective threshold_coresidual(std::shared_ptr<const Lattice> lat);

    // Closed forms on the unit interval only.
    static BinaryConnective product_overlap(std::shared_ptr<const UnitIntervalLattice> lat);
    static BinaryConnective probabilistic_sum(std::shared_ptr<const UnitIntervalLattice> lat);
    static BinaryConnective godel_residual(std::shared_ptr<const UnitIntervalLattice> lat);
    static BinaryConnective goguen_residual(std::shared_ptr<const UnitIntervalLattice> lat);
    static BinaryConnective dual_godel_coresidual(std::shared_ptr<const UnitIntervalLattice> lat);
    static BinaryConnective dual_goguen_coresidual(std::shared_ptr<const UnitIntervalLattice> lat);

    // Explicit table over a finite carrier; entry (i,j) is the value at
    // (element i, element j). Every entry must belong to `lat`.
    static BinaryConnective from_table(ConnectiveKind kind,
                                       std::shared_ptr<const Lattice> lat,
                                       std::vector<std::vector<Elem>> table,
                                       std::string name);

    Elem apply(Elem a, Elem b) const;

    ConnectiveKind kind() const { return kind_; }
    ConnectiveForm form() const { return form_; }
    const std::string& name() const { return name_; }
    const Lattice& lattice() const { return *lat_; }
    std::shared_ptr<const Lattice> lattice_ptr() const { return lat_; }
    bool tabulated() const { return form_ == ConnectiveForm::Table; }

    // Optional validation stamp; set by callers that ran a validator.
    void attach_validation(std::shared_ptr<const ValidationReport> r) const { validation_ = std::move(r); }
    std::shared_ptr<const ValidationReport> validation() const { return validation_; }

private:
    BinaryConnective(ConnectiveKind kind, ConnectiveForm form,
                     std::shared_ptr<const Lattice> lat, std::string name)
        : kind_(kind), form_(form), lat_(std::move(lat)), name_(std::move(name)) {}

    ConnectiveKind kind_;
    ConnectiveForm form_;
    std::shared_ptr<const Lattice> lat_;
    std::string name_;
    std::vector<Elem> table_; // flat |L| x |L|, Table form only
    mutable std::shared_ptr<const ValidationReport> validation_;
};

class Negator {
public:
    // 1 − u on the unit interval.
    static Negator standard(std::shared_ptr<const UnitIntervalLattice> lat);
    // Explicit value list over a finite carrier: values[i] = N(element i).
    static Negator from_table(std::shared_ptr<const Lattice> lat,
                              std::vector<Elem> values, std::string name);
    // Reverses a chain end for end: element i ↦ element n−1−i.
    static Negator chain_reversal(std::shared_ptr<const TableLattice> lat);
    // Arbitrary function on [0,1]; `id` names it in reports and files.
    static Negator from_function(std::shared_ptr<const UnitIntervalLattice> lat,
                                 std::string id, std::function<double(double)> fn);

    Elem apply(Elem u) const;

    const std::string& name() const { return name_; }
    const Lattice& lattice() const { return *lat_; }
    std::shared_ptr<const Lattice> lattice_ptr() const { return lat_; }
    bool tabulated() const { return !table_.empty(); }
    const std::vector<Elem>& table() const { return table_; }

private:
    Negator(std::shared_ptr<const Lattice> lat, std::string name)
        : lat_(std::move(lat)), name_(std::move(name)) {}

    std::shared_ptr<const Lattice> lat_;
    std::string name_;
    std::vector<Elem> table_;                  // finite carriers
    std::function<double(double)> fn_;         // unit carrier
};

struct ValidateOptions {
    std::size_t grid_points = 101; // sample density on the unit interval
    std::size_t family_cap = 8;    // exhaustive family checks up to |L| = cap
};

// Axioms for an overlap map: commutativity; annihilator (zero exactly when an
// argument is zero); unanimity at top (one exactly when both are one);
// monotonicity in the second argument; distribution over joins in the second
// argument and over meets in the first. Finite carriers are exhaustive except
// the family axiom above the cap; the unit interval is grid-sampled.
ValidationReport validate_overlap(const BinaryConnective& theta,
                                  const ValidateOptions& opts = {});

// Dual axioms for a grouping map: zero exactly when both arguments are zero,
// one exactly when either argument is one, plus the same monotonicity and
// distribution requirements.
ValidationReport validate_grouping(const BinaryConnective& eta,
                                   const ValidateOptions& opts = {});

// Boundary swap (N(0)=1, N(1)=0) and antitonicity; also reports whether the
// negator is involutive, and — on chains and the unit interval — whether it
// is strictly decreasing (facts "involutive", "strict").
ValidationReport validate_negator(const Negator& n, const ValidateOptions& opts = {});

// Greatest w with theta(u, w) ≤ v, as a table on finite carriers. On the unit
// interval only the product and meet forms have known companions (Goguen,
// Godel); anything else raises NoClosedFormError.
BinaryConnective derive_residual(const BinaryConnective& theta);

// Least w with eta(u, w) ≥ v; unit-interval companions exist for join and
// probabilistic sum (dual-Godel, dual-Goguen).
BinaryConnective derive_coresidual(const BinaryConnective& eta);

// N(u) = I(u, bottom) for residual implicators, N(u) = I(u, top) for
// co-residual ones.
Negator induced_negator(const BinaryConnective& implicator);

// For (overlap, grouping): checks eta(N(u),N(v)) = N(theta(u,v)) and
// theta(N(u),N(v)) = N(eta(u,v)). For (residual, co-residual) the same shape
// with the implicators; the report records whether the negator is involutive,
// which that clause presumes.
ValidationReport check_duality(const BinaryConnective& a, const BinaryConnective& b,
                               const Negator& n, const ValidateOptions& opts = {});

// Residual pairs: theta(u,v) ≤ w  ⟺  u ≤ I(v,w) over all triples.
// Co-residual pairs: eta(u,v) ≥ w  ⟺  u ≥ I(v,w).
ValidationReport adjointness_check(const BinaryConnective& op,
                                   const BinaryConnective& implicator,
                                   const ValidateOptions& opts = {});

// Property probes (exact on finite carriers, grid-sampled on the unit
// interval). For overlap maps the reference element is top, for grouping maps
// it is bottom.
struct OverlapGroupingProperties {
    bool has_neutral = false;   // op(ref, u) = u for all u
    bool deflationary = false;  // op(ref, u) ≤ u (overlap) / ≥ u (grouping)
    bool inflationary = false;  // the reverse comparison
    bool exchange = false;      // op(u, op(v, w)) = op(v, op(u, w))
};
OverlapGroupingProperties overlap_properties(const BinaryConnective& theta,
                                             const ValidateOptions& opts = {});
OverlapGroupingProperties grouping_properties(const BinaryConnective& eta,
                                              const ValidateOptions& opts = {});

struct ImplicatorProperties {
    bool ordering = false;   // residual: u ≤ v ⟺ I(u,v)=1; co-residual: u ≥ v ⟺ I(u,v)=0
    bool neutrality = false; // residual: I(1,u)=u; co-residual: I(0,u)=u
    bool identity = false;   // residual: I(u,u)=1; co-residual: I(u,u)=0
    bool exchange = false;   // I(u, I(v,w)) = I(v, I(u,w))
};
ImplicatorProperties residual_properties(const BinaryConnective& impl,
                                         const ValidateOptions& opts = {});
ImplicatorProperties coresidual_properties(const BinaryConnective& impl,
                                           const ValidateOptions& opts = {});

// Facts view of the appropriate property probe for CLI/report display.
std::vector<std::pair<std::string, std::string>> connective_properties(
    const BinaryConnective& conn, const ValidateOptions& opts = {});

// Elements the validators quantify over: every element of a finite carrier,
// a uniform grid on the unit interval.
std::vector<Elem> validation_domain(const Lattice& lat, std::size_t grid_points);

} // namespace lft
