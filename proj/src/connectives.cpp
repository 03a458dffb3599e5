#include "lft/connectives.hpp"

#include <algorithm>
#include <cmath>

namespace lft {

namespace {

constexpr std::size_t kViolationCap = 64;

// Collects violations with a deterministic cap so a badly broken table does
// not flood the report; traversal order is fixed, so the kept set is too.
struct Collector {
    ValidationReport rep;
    bool capped = false;

    explicit Collector(std::string subject) { rep.subject = std::move(subject); }

    void fail(std::string axiom, std::vector<std::string> witness, std::string detail) {
        rep.passed = false;
        if (rep.violations.size() < kViolationCap)
            rep.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
        else
            capped = true;
    }

    ValidationReport take() {
        if (capped) rep.notes.push_back("violation list truncated at " + std::to_string(kViolationCap));
        rep.finish();
        return std::move(rep);
    }
};

std::string fact_bool(bool b) { return b ? "yes" : "no"; }

} // namespace

void ValidationReport::finish() { std::sort(violations.begin(), violations.end()); }

std::string to_string(ConnectiveKind k) {
    switch (k) {
        case ConnectiveKind::Overlap: return "overlap";
        case ConnectiveKind::Grouping: return "grouping";
        case ConnectiveKind::ResidualImplicator: return "residual-implicator";
        case ConnectiveKind::CoResidualImplicator: return "coresidual-implicator";
    }
    return "?";
}

std::optional<ConnectiveKind> connective_kind_from_string(const std::string& s) {
    if (s == "overlap") return ConnectiveKind::Overlap;
    if (s == "grouping") return ConnectiveKind::Grouping;
    if (s == "residual-implicator") return ConnectiveKind::ResidualImplicator;
    if (s == "coresidual-implicator") return ConnectiveKind::CoResidualImplicator;
    return std::nullopt;
}

std::string to_string(ConnectiveForm f) {
    switch (f) {
        case ConnectiveForm::Table: return "table";
        case ConnectiveForm::Meet: return "meet";
        case ConnectiveForm::Join: return "join";
        case ConnectiveForm::Product: return "product";
        case ConnectiveForm::ProbabilisticSum: return "probabilistic-sum";
        case ConnectiveForm::Godel: return "godel";
        case ConnectiveForm::Goguen: return "goguen";
        case ConnectiveForm::DualGodel: return "dual-godel";
        case ConnectiveForm::DualGoguen: return "dual-goguen";
        case ConnectiveForm::ThresholdResidual: return "threshold-residual";
        case ConnectiveForm::ThresholdCoResidual: return "threshold-coresidual";
    }
    return "?";
}

std::optional<ConnectiveForm> connective_form_from_string(const std::string& s) {
    if (s == "table") return ConnectiveForm::Table;
    if (s == "meet") return ConnectiveForm::Meet;
    if (s == "join") return ConnectiveForm::Join;
    if (s == "product") return ConnectiveForm::Product;
    if (s == "probabilistic-sum") return ConnectiveForm::ProbabilisticSum;
    if (s == "godel") return ConnectiveForm::Godel;
    if (s == "goguen") return ConnectiveForm::Goguen;
    if (s == "dual-godel") return ConnectiveForm::DualGodel;
    if (s == "dual-goguen") return ConnectiveForm::DualGoguen;
    if (s == "threshold-residual") return ConnectiveForm::ThresholdResidual;
    if (s == "threshold-coresidual") return ConnectiveForm::ThresholdCoResidual;
    return std::nullopt;
}

// ------------------------------------------------------- BinaryConnective

BinaryConnective BinaryConnective::meet_overlap(std::shared_ptr<const Lattice> lat) {
    return BinaryConnective(ConnectiveKind::Overlap, ConnectiveForm::Meet, std::move(lat), "meet");
}

BinaryConnective BinaryConnective::join_grouping(std::shared_ptr<const Lattice> lat) {
    return BinaryConnective(ConnectiveKind::Grouping, ConnectiveForm::Join, std::move(lat), "join");
}

BinaryConnective BinaryConnective::threshold_residual(std::shared_ptr<const Lattice> lat) {
    return BinaryConnective(ConnectiveKind::ResidualImplicator, ConnectiveForm::ThresholdResidual,
                            std::move(lat), "threshold-residual");
}

BinaryConnective BinaryConnective::threshold_coresidual(std::shared_ptr<const Lattice> lat) {
    return BinaryConnective(ConnectiveKind::CoResidualImplicator, ConnectiveForm::ThresholdCoResidual,
                            std::move(lat), "threshold-coresidual");
}

BinaryConnective BinaryConnective::product_overlap(std::shared_ptr<const UnitIntervalLattice> lat) {
    return BinaryConnective(ConnectiveKind::Overlap, ConnectiveForm::Product, std::move(lat), "product");
}

BinaryConnective BinaryConnective::probabilistic_sum(std::shared_ptr<const UnitIntervalLattice> lat) {
    return BinaryConnective(ConnectiveKind::Grouping, ConnectiveForm::ProbabilisticSum,
                            std::move(lat), "probabilistic-sum");
}

BinaryConnective BinaryConnective::godel_residual(std::shared_ptr<const UnitIntervalLattice> lat) {
    return BinaryConnective(ConnectiveKind::ResidualImplicator, ConnectiveForm::Godel,
                            std::move(lat), "godel");
}

BinaryConnective BinaryConnective::goguen_residual(std::shared_ptr<const UnitIntervalLattice> lat) {
    return BinaryConnective(ConnectiveKind::ResidualImplicator, ConnectiveForm::Goguen,
                            std::move(lat), "goguen");
}

BinaryConnective BinaryConnective::dual_godel_coresidual(std::shared_ptr<const UnitIntervalLattice> lat) {
    return BinaryConnective(ConnectiveKind::CoResidualImplicator, ConnectiveForm::DualGodel,
                            std::move(lat), "dual-godel");
}

BinaryConnective BinaryConnective::dual_goguen_coresidual(std::shared_ptr<const UnitIntervalLattice> lat) {
    return BinaryConnective(ConnectiveKind::CoResidualImplicator, ConnectiveForm::DualGoguen,
                            std::move(lat), "dual-goguen");
}

BinaryConnective BinaryConnective::from_table(ConnectiveKind kind,
                                              std::shared_ptr<const Lattice> lat,
                                              std::vector<std::vector<Elem>> table,
                                              std::string name) {
    if (!lat->finite())
        throw std::invalid_argument("tabulated connective needs a finite carrier");
    const std::size_t n = lat->size();
    if (table.size() != n)
        throw std::invalid_argument("connective table has " + std::to_string(table.size()) +
                                    " rows, carrier has " + std::to_string(n) + " elements");
    BinaryConnective conn(kind, ConnectiveForm::Table, lat, std::move(name));
    conn.table_.reserve(n * n);
    for (const auto& row : table) {
        if (row.size() != n)
            throw std::invalid_argument("connective table row length mismatch");
        for (Elem e : row) {
            finite_index(*lat, e); // validates membership
            conn.table_.push_back(e);
        }
    }
    return conn;
}

Elem BinaryConnective::apply(Elem a, Elem b) const {
    lat_->require_member(a, "left operand");
    lat_->require_member(b, "right operand");
    switch (form_) {
        case ConnectiveForm::Table: {
            const std::size_t n = lat_->size();
            return table_[finite_index(*lat_, a) * n + finite_index(*lat_, b)];
        }
        case ConnectiveForm::Meet: return lat_->meet(a, b);
        case ConnectiveForm::Join: return lat_->join(a, b);
        case ConnectiveForm::Product: return Elem{a.raw * b.raw, lat_.get()};
        case ConnectiveForm::ProbabilisticSum:
            return Elem{a.raw + b.raw - a.raw * b.raw, lat_.get()};
        case ConnectiveForm::Godel: return lat_->leq(a, b) ? lat_->top() : b;
        case ConnectiveForm::Goguen:
            return lat_->leq(a, b) ? lat_->top() : Elem{b.raw / a.raw, lat_.get()};
        case ConnectiveForm::DualGodel: return lat_->leq(b, a) ? lat_->bottom() : b;
        case ConnectiveForm::DualGoguen:
            return lat_->leq(b, a) ? lat_->bottom()
                                   : Elem{(b.raw - a.raw) / (1.0 - a.raw), lat_.get()};
        case ConnectiveForm::ThresholdResidual: return lat_->leq(a, b) ? lat_->top() : b;
        case ConnectiveForm::ThresholdCoResidual: return lat_->leq(a, b) ? lat_->bottom() : a;
    }
    throw std::logic_error("unhandled connective form");
}

// ------------------------------------------------------------------ Negator

Negator Negator::standard(std::shared_ptr<const UnitIntervalLattice> lat) {
    Negator n(lat, "standard");
    n.fn_ = [](double u) { return 1.0 - u; };
    return n;
}

Negator Negator::from_table(std::shared_ptr<const Lattice> lat,
                            std::vector<Elem> values, std::string name) {
    if (!lat->finite())
        throw std::invalid_argument("tabulated negator needs a finite carrier");
    if (values.size() != lat->size())
        throw std::invalid_argument("negator table has " + std::to_string(values.size()) +
                                    " entries, carrier has " + std::to_string(lat->size()));
    for (Elem e : values) finite_index(*lat, e);
    Negator n(std::move(lat), std::move(name));
    n.table_ = std::move(values);
    return n;
}

Negator Negator::chain_reversal(std::shared_ptr<const TableLattice> lat) {
    if (!lat->is_chain())
        throw std::invalid_argument("chain reversal needs a totally ordered carrier");
    // On a chain the label order may differ from the order; sort by leq.
    const std::size_t n = lat->size();
    std::vector<std::size_t> sorted(n);
    for (std::size_t i = 0; i < n; ++i) sorted[i] = i;
    std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
        return lat->lt(lat->element(a), lat->element(b));
    });
    std::vector<std::size_t> rank(n);
    for (std::size_t r = 0; r < n; ++r) rank[sorted[r]] = r;
    std::vector<Elem> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = lat->element(sorted[n - 1 - rank[i]]);
    return from_table(lat, std::move(values), "reversal");
}

Negator Negator::from_function(std::shared_ptr<const UnitIntervalLattice> lat,
                               std::string id, std::function<double(double)> fn) {
    Negator n(std::move(lat), std::move(id));
    n.fn_ = std::move(fn);
    return n;
}

Elem Negator::apply(Elem u) const {
    lat_->require_member(u, "negator argument");
    if (!table_.empty()) return table_[finite_index(*lat_, u)];
    double v = fn_(u.raw);
    v = std::clamp(v, 0.0, 1.0);
    return Elem{v, lat_.get()};
}

// --------------------------------------------------------------- validators

std::vector<Elem> validation_domain(const Lattice& lat, std::size_t grid_points) {
    if (lat.finite()) return lat.all_elements();
    const auto* unit = dynamic_cast<const UnitIntervalLattice*>(&lat);
    if (!unit) throw std::logic_error("unknown non-finite carrier");
    return unit->grid(grid_points);
}

namespace {

// Shared body for the overlap/grouping axiom sets. The two differ only in
// which bound anchors the annihilator/unanimity axioms: an overlap map is
// zero iff an argument is zero and one iff both are one; a grouping map is
// zero iff both are zero and one iff either is one.
ValidationReport validate_pool(const BinaryConnective& c, bool overlap,
                               const ValidateOptions& opts) {
    const Lattice& lat = c.lattice();
    Collector col((overlap ? "overlap '" : "grouping '") + c.name() + "' on " + lat.name());
    const std::vector<Elem> dom = validation_domain(lat, opts.grid_points);
    const Elem zero = lat.bottom(), one = lat.top();
    const bool finite = lat.finite();
    if (!finite) {
        col.rep.exhaustive = false;
        col.rep.notes.push_back("sampled evidence: " + std::to_string(dom.size()) +
                                "-point grid on the unit interval");
    }

    auto L = [&](Elem e) { return lat.label(e); };

    for (Elem u : dom) {
        for (Elem v : dom) {
            Elem uv = c.apply(u, v);
            Elem vu = c.apply(v, u);
            ++col.rep.cases_checked;
            if (!lat.equal(uv, vu))
                col.fail("(i)", {L(u), L(v)},
                         "op(" + L(u) + "," + L(v) + ")=" + L(uv) + " but op(" + L(v) + "," +
                             L(u) + ")=" + L(vu));
            bool is_zero = lat.equal(uv, zero);
            bool should_zero = overlap ? (lat.equal(u, zero) || lat.equal(v, zero))
                                       : (lat.equal(u, zero) && lat.equal(v, zero));
            ++col.rep.cases_checked;
            if (is_zero != should_zero)
                col.fail("(ii)", {L(u), L(v)},
                         "op(" + L(u) + "," + L(v) + ")=" + L(uv) +
                             (should_zero ? " expected bottom" : " hits bottom unexpectedly"));
            bool is_one = lat.equal(uv, one);
            bool should_one = overlap ? (lat.equal(u, one) && lat.equal(v, one))
                                      : (lat.equal(u, one) || lat.equal(v, one));
            ++col.rep.cases_checked;
            if (is_one != should_one)
                col.fail("(iii)", {L(u), L(v)},
                         "op(" + L(u) + "," + L(v) + ")=" + L(uv) +
                             (should_one ? " expected top" : " hits top unexpectedly"));
        }
    }

    // (iv) monotone in the second argument.
    for (Elem u : dom)
        for (Elem v : dom)
            for (Elem w : dom) {
                if (!lat.leq(v, w)) continue;
                ++col.rep.cases_checked;
                if (!lat.leq(c.apply(u, v), c.apply(u, w)))
                    col.fail("(iv)", {L(u), L(v), L(w)},
                             "second argument not monotone at u=" + L(u) + ", " + L(v) +
                                 " <= " + L(w));
            }

    // (v) distributes over joins in the second slot, meets in the first.
    auto check_family = [&](const std::vector<Elem>& fam) {
        Elem fam_join = lat.join_of(fam);
        Elem fam_meet = lat.meet_of(fam);
        for (Elem t : dom) {
            std::vector<Elem> mapped;
            mapped.reserve(fam.size());
            for (Elem s : fam) mapped.push_back(c.apply(t, s));
            ++col.rep.cases_checked;
            if (!lat.equal(c.apply(t, fam_join), lat.join_of(mapped)))
                col.fail("(v)", {L(t)}, "join distribution fails at u=" + L(t) +
                                            " over a family of size " + std::to_string(fam.size()));
            mapped.clear();
            for (Elem s : fam) mapped.push_back(c.apply(s, t));
            ++col.rep.cases_checked;
            if (!lat.equal(c.apply(fam_meet, t), lat.meet_of(mapped)))
                col.fail("(v)", {L(t)}, "meet distribution fails at v=" + L(t) +
                                            " over a family of size " + std::to_string(fam.size()));
        }
    };

    if (finite && dom.size() <= opts.family_cap) {
        const std::size_t n = dom.size();
        std::vector<Elem> fam;
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            fam.clear();
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) fam.push_back(dom[i]);
            check_family(fam);
        }
        col.rep.notes.push_back("axiom (v): every nonempty family checked");
    } else {
        for (Elem a : dom)
            for (Elem b : dom) check_family({a, b});
        check_family(dom);
        col.rep.exhaustive = false;
        col.rep.notes.push_back("axiom (v): pair families plus the full family (partial coverage)");
    }

    return col.take();
}

} // namespace

ValidationReport validate_overlap(const BinaryConnective& theta, const ValidateOptions& opts) {
    return validate_pool(theta, true, opts);
}

ValidationReport validate_grouping(const BinaryConnective& eta, const ValidateOptions& opts) {
    return validate_pool(eta, false, opts);
}

ValidationReport validate_negator(const Negator& n, const ValidateOptions& opts) {
    const Lattice& lat = n.lattice();
    Collector col("negator '" + n.name() + "' on " + lat.name());
    const std::vector<Elem> dom = validation_domain(lat, opts.grid_points);
    const bool finite = lat.finite();
    if (!finite) {
        col.rep.exhaustive = false;
        col.rep.notes.push_back("sampled evidence: " + std::to_string(dom.size()) +
                                "-point grid on the unit interval");
    }
    auto L = [&](Elem e) { return lat.label(e); };

    ++col.rep.cases_checked;
    if (!lat.equal(n.apply(lat.bottom()), lat.top()))
        col.fail("boundary", {L(lat.bottom())}, "N(bottom) != top");
    ++col.rep.cases_checked;
    if (!lat.equal(n.apply(lat.top()), lat.bottom()))
        col.fail("boundary", {L(lat.top())}, "N(top) != bottom");

    for (Elem u : dom)
        for (Elem v : dom) {
            if (!lat.leq(u, v)) continue;
            ++col.rep.cases_checked;
            if (!lat.leq(n.apply(v), n.apply(u)))
                col.fail("antitone", {L(u), L(v)},
                         "N(" + L(v) + ")=" + L(n.apply(v)) + " not below N(" + L(u) + ")=" +
                             L(n.apply(u)));
        }

    bool involutive = true;
    for (Elem u : dom) {
        ++col.rep.cases_checked;
        if (!lat.equal(n.apply(n.apply(u)), u)) { involutive = false; break; }
    }
    col.rep.facts.emplace_back("involutive", fact_bool(involutive));

    // Strictness only has meaning on totally ordered carriers. On the unit
    // interval a strictly decreasing involutive map is continuous, so the
    // sampled probe requires both.
    const auto* table = dynamic_cast<const TableLattice*>(&lat);
    bool applicable = !finite || (table && table->is_chain());
    if (applicable) {
        bool strict = true;
        for (Elem u : dom) {
            for (Elem v : dom) {
                if (!lat.lt(u, v)) continue;
                if (!lat.lt(n.apply(v), n.apply(u))) { strict = false; break; }
            }
            if (!strict) break;
        }
        if (!finite) strict = strict && involutive;
        col.rep.facts.emplace_back("strict", fact_bool(strict));
    } else {
        col.rep.facts.emplace_back("strict", "n/a");
        col.rep.notes.push_back("strictness evaluated only on chains and the unit interval");
    }

    return col.take();
}

// -------------------------------------------------------------- derivations

BinaryConnective derive_residual(const BinaryConnective& theta) {
    if (theta.kind() != ConnectiveKind::Overlap)
        throw KindMismatchError("derive_residual expects an overlap map, got " +
                                to_string(theta.kind()) + " '" + theta.name() + "'");
    auto lat = theta.lattice_ptr();
    if (lat->finite()) {
        const std::size_t n = lat->size();
        std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
        std::vector<Elem> hits;
        for (std::size_t i = 0; i < n; ++i) {
            Elem u = lat->element(i);
            for (std::size_t j = 0; j < n; ++j) {
                Elem v = lat->element(j);
                hits.clear();
                for (std::size_t k = 0; k < n; ++k) {
                    Elem w = lat->element(k);
                    if (lat->leq(theta.apply(u, w), v)) hits.push_back(w);
                }
                table[i][j] = lat->join_of(hits, EmptyFold::Identity);
            }
        }
        return BinaryConnective::from_table(ConnectiveKind::ResidualImplicator, lat,
                                            std::move(table), "residual(" + theta.name() + ")");
    }
    auto unit = std::dynamic_pointer_cast<const UnitIntervalLattice>(lat);
    if (unit) {
        if (theta.form() == ConnectiveForm::Meet) return BinaryConnective::godel_residual(unit);
        if (theta.form() == ConnectiveForm::Product) return BinaryConnective::goguen_residual(unit);
    }
    throw NoClosedFormError("no residual companion for '" + theta.name() + "' on " + lat->name());
}

BinaryConnective derive_coresidual(const BinaryConnective& eta) {
    if (eta.kind() != ConnectiveKind::Grouping)
        throw KindMismatchError("derive_coresidual expects a grouping map, got " +
                                to_string(eta.kind()) + " '" + eta.name() + "'");
    auto lat = eta.lattice_ptr();
    if (lat->finite()) {
        const std::size_t n = lat->size();
        std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
        std::vector<Elem> hits;
        for (std::size_t i = 0; i < n; ++i) {
            Elem u = lat->element(i);
            for (std::size_t j = 0; j < n; ++j) {
                Elem v = lat->element(j);
                hits.clear();
                for (std::size_t k = 0; k < n; ++k) {
                    Elem w = lat->element(k);
                    if (lat->leq(v, eta.apply(u, w))) hits.push_back(w);
                }
                table[i][j] = lat->meet_of(hits, EmptyFold::Identity);
            }
        }
        return BinaryConnective::from_table(ConnectiveKind::CoResidualImplicator, lat,
                                            std::move(table), "coresidual(" + eta.name() + ")");
    }
    auto unit = std::dynamic_pointer_cast<const UnitIntervalLattice>(lat);
    if (unit) {
        if (eta.form() == ConnectiveForm::Join) return BinaryConnective::dual_godel_coresidual(unit);
        if (eta.form() == ConnectiveForm::ProbabilisticSum)
            return BinaryConnective::dual_goguen_coresidual(unit);
    }
    throw NoClosedFormError("no co-residual companion for '" + eta.name() + "' on " + lat->name());
}

Negator induced_negator(const BinaryConnective& implicator) {
    auto lat = implicator.lattice_ptr();
    Elem anchor;
    if (implicator.kind() == ConnectiveKind::ResidualImplicator)
        anchor = lat->bottom();
    else if (implicator.kind() == ConnectiveKind::CoResidualImplicator)
        anchor = lat->top();
    else
        throw KindMismatchError("induced_negator expects an implicator, got " +
                                to_string(implicator.kind()) + " '" + implicator.name() + "'");

    std::string name = "induced(" + implicator.name() + ")";
    if (lat->finite()) {
        std::vector<Elem> values;
        values.reserve(lat->size());
        for (std::size_t i = 0; i < lat->size(); ++i)
            values.push_back(implicator.apply(lat->element(i), anchor));
        return Negator::from_table(lat, std::move(values), std::move(name));
    }
    auto unit = std::dynamic_pointer_cast<const UnitIntervalLattice>(lat);
    if (!unit) throw std::logic_error("unknown non-finite carrier");
    BinaryConnective impl = implicator;
    return Negator::from_function(
        unit, std::move(name),
        [impl, anchor](double u) { return impl.apply(Elem{u, &impl.lattice()}, anchor).raw; });
}

// ----------------------------------------------------------------- duality

ValidationReport check_duality(const BinaryConnective& a, const BinaryConnective& b,
                               const Negator& n, const ValidateOptions& opts) {
    const Lattice& lat = a.lattice();
    if (&b.lattice() != &lat || &n.lattice() != &lat)
        throw CarrierMismatchError("duality check needs one shared carrier");

    bool implicator_pair;
    if (a.kind() == ConnectiveKind::Overlap && b.kind() == ConnectiveKind::Grouping)
        implicator_pair = false;
    else if (a.kind() == ConnectiveKind::ResidualImplicator &&
             b.kind() == ConnectiveKind::CoResidualImplicator)
        implicator_pair = true;
    else
        throw KindMismatchError("duality check expects (overlap, grouping) or "
                                "(residual, co-residual); got " +
                                to_string(a.kind()) + ", " + to_string(b.kind()));

    Collector col("duality of '" + a.name() + "' and '" + b.name() + "' under '" + n.name() +
                  "' on " + lat.name());
    const std::vector<Elem> dom = validation_domain(lat, opts.grid_points);
    if (!lat.finite()) {
        col.rep.exhaustive = false;
        col.rep.notes.push_back("sampled evidence: " + std::to_string(dom.size()) +
                                "-point grid on the unit interval");
    }
    auto L = [&](Elem e) { return lat.label(e); };

    bool involutive = true;
    for (Elem u : dom)
        if (!lat.equal(n.apply(n.apply(u)), u)) { involutive = false; break; }
    col.rep.facts.emplace_back("negator involutive", fact_bool(involutive));
    if (implicator_pair && !involutive)
        col.rep.notes.push_back("implicator duality presumes an involutive negator");

    for (Elem u : dom)
        for (Elem v : dom) {
            Elem nu = n.apply(u), nv = n.apply(v);
            ++col.rep.cases_checked;
            if (!lat.equal(b.apply(nu, nv), n.apply(a.apply(u, v))))
                col.fail("(i)", {L(u), L(v)},
                         "second(N(u),N(v)) != N(first(u,v)) at u=" + L(u) + ", v=" + L(v));
            ++col.rep.cases_checked;
            if (!lat.equal(a.apply(nu, nv), n.apply(b.apply(u, v))))
                col.fail("(ii)", {L(u), L(v)},
                         "first(N(u),N(v)) != N(second(u,v)) at u=" + L(u) + ", v=" + L(v));
        }

    return col.take();
}

ValidationReport adjointness_check(const BinaryConnective& op,
                                   const BinaryConnective& implicator,
                                   const ValidateOptions& opts) {
    const Lattice& lat = op.lattice();
    if (&implicator.lattice() != &lat)
        throw CarrierMismatchError("adjointness check needs one shared carrier");

    bool residual_side;
    if (op.kind() == ConnectiveKind::Overlap &&
        implicator.kind() == ConnectiveKind::ResidualImplicator)
        residual_side = true;
    else if (op.kind() == ConnectiveKind::Grouping &&
             implicator.kind() == ConnectiveKind::CoResidualImplicator)
        residual_side = false;
    else
        throw KindMismatchError("adjointness check expects (overlap, residual) or "
                                "(grouping, co-residual); got " +
                                to_string(op.kind()) + ", " + to_string(implicator.kind()));

    Collector col("adjointness of '" + op.name() + "' and '" + implicator.name() + "' on " +
                  lat.name());
    const std::vector<Elem> dom = validation_domain(lat, opts.grid_points);
    if (!lat.finite()) {
        col.rep.exhaustive = false;
        col.rep.notes.push_back("sampled evidence: " + std::to_string(dom.size()) +
                                "-point grid on the unit interval");
    }
    auto L = [&](Elem e) { return lat.label(e); };

    for (Elem u : dom)
        for (Elem v : dom)
            for (Elem w : dom) {
                ++col.rep.cases_checked;
                bool lhs = residual_side ? lat.leq(op.apply(u, v), w)
                                         : lat.leq(w, op.apply(u, v));
                bool rhs = residual_side ? lat.leq(u, implicator.apply(v, w))
                                         : lat.leq(implicator.apply(v, w), u);
                if (lhs != rhs)
                    col.fail("adjointness", {L(u), L(v), L(w)},
                             std::string(residual_side ? "op(u,v)<=w" : "op(u,v)>=w") + " is " +
                                 (lhs ? "true" : "false") + " but the implicator side is " +
                                 (rhs ? "true" : "false"));
            }

    return col.take();
}

// --------------------------------------------------------------- properties

namespace {

bool exchange_holds(const BinaryConnective& c, const std::vector<Elem>& dom) {
    const Lattice& lat = c.lattice();
    for (Elem u : dom)
        for (Elem v : dom)
            for (Elem w : dom)
                if (!lat.equal(c.apply(u, c.apply(v, w)), c.apply(v, c.apply(u, w))))
                    return false;
    return true;
}

} // namespace

OverlapGroupingProperties overlap_properties(const BinaryConnective& theta,
                                             const ValidateOptions& opts) {
    const Lattice& lat = theta.lattice();
    const std::vector<Elem> dom = validation_domain(lat, opts.grid_points);
    OverlapGroupingProperties p;
    p.has_neutral = p.deflationary = p.inflationary = true;
    for (Elem u : dom) {
        Elem t = theta.apply(lat.top(), u);
        if (!lat.equal(t, u)) p.has_neutral = false;
        if (!lat.leq(t, u)) p.deflationary = false;
        if (!lat.leq(u, t)) p.inflationary = false;
    }
    p.exchange = exchange_holds(theta, dom);
    return p;
}

OverlapGroupingProperties grouping_properties(const BinaryConnective& eta,
                                              const ValidateOptions& opts) {
    const Lattice& lat = eta.lattice();
    const std::vector<Elem> dom = validation_domain(lat, opts.grid_points);
    OverlapGroupingProperties p;
    p.has_neutral = p.deflationary = p.inflationary = true;
    for (Elem u : dom) {
        Elem t = eta.apply(lat.bottom(), u);
        if (!lat.equal(t, u)) p.has_neutral = false;
        if (!lat.leq(u, t)) p.deflationary = false; // grouping deflation: eta(0,u) >= u
        if (!lat.leq(t, u)) p.inflationary = false;
    }
    p.exchange = exchange_holds(eta, dom);
    return p;
}

ImplicatorProperties residual_properties(const BinaryConnective& impl,
                                         const ValidateOptions& opts) {
    const Lattice& lat = impl.lattice();
    const std::vector<Elem> dom = validation_domain(lat, opts.grid_points);
    ImplicatorProperties p;
    p.ordering = p.neutrality = p.identity = true;
    for (Elem u : dom) {
        if (!lat.equal(impl.apply(lat.top(), u), u)) p.neutrality = false;
        if (!lat.equal(impl.apply(u, u), lat.top())) p.identity = false;
        for (Elem v : dom)
            if (lat.leq(u, v) != lat.equal(impl.apply(u, v), lat.top())) p.ordering = false;
    }
    p.exchange = exchange_holds(impl, dom);
    return p;
}

ImplicatorProperties coresidual_properties(const BinaryConnective& impl,
                                           const ValidateOptions& opts) {
    const Lattice& lat = impl.lattice();
    const std::vector<Elem> dom = validation_domain(lat, opts.grid_points);
    ImplicatorProperties p;
    p.ordering = p.neutrality = p.identity = true;
    for (Elem u : dom) {
        if (!lat.equal(impl.apply(lat.bottom(), u), u)) p.neutrality = false;
        if (!lat.equal(impl.apply(u, u), lat.bottom())) p.identity = false;
        for (Elem v : dom)
            if (lat.leq(v, u) != lat.equal(impl.apply(u, v), lat.bottom())) p.ordering = false;
    }
    p.exchange = exchange_holds(impl, dom);
    return p;
}

std::vector<std::pair<std::string, std::string>> connective_properties(
    const BinaryConnective& conn, const ValidateOptions& opts) {
    std::vector<std::pair<std::string, std::string>> facts;
    switch (conn.kind()) {
        case ConnectiveKind::Overlap:
        case ConnectiveKind::Grouping: {
            OverlapGroupingProperties p = conn.kind() == ConnectiveKind::Overlap
                                              ? overlap_properties(conn, opts)
                                              : grouping_properties(conn, opts);
            facts.emplace_back("has-neutral", fact_bool(p.has_neutral));
            facts.emplace_back("deflationary", fact_bool(p.deflationary));
            facts.emplace_back("inflationary", fact_bool(p.inflationary));
            facts.emplace_back("exchange", fact_bool(p.exchange));
            break;
        }
        case ConnectiveKind::ResidualImplicator:
        case ConnectiveKind::CoResidualImplicator: {
            ImplicatorProperties p = conn.kind() == ConnectiveKind::ResidualImplicator
                                         ? residual_properties(conn, opts)
                                         : coresidual_properties(conn, opts);
            facts.emplace_back("ordering", fact_bool(p.ordering));
            facts.emplace_back("neutrality", fact_bool(p.neutrality));
            facts.emplace_back("identity", fact_bool(p.identity));
            facts.emplace_back("exchange", fact_bool(p.exchange));
            break;
        }
    }
    return facts;
}

} // namespace lft
