#include "lft/transforms.hpp"

namespace lft {

std::string to_string(DirectKind k) {
    switch (k) {
        case DirectKind::UpperTheta: return "upper-theta";
        case DirectKind::LowerEta: return "lower-eta";
        case DirectKind::UpperCoResidual: return "upper-coresidual";
        case DirectKind::LowerResidual: return "lower-residual";
    }
    return "?";
}

std::string to_string(InverseKind k) {
    switch (k) {
        case InverseKind::UpperResidual: return "upper-residual";
        case InverseKind::LowerTheta: return "lower-theta";
        case InverseKind::UpperEta: return "upper-eta";
        case InverseKind::LowerCoResidual: return "lower-coresidual";
    }
    return "?";
}

std::optional<DirectKind> direct_kind_from_string(const std::string& s) {
    if (s == "upper-theta") return DirectKind::UpperTheta;
    if (s == "lower-eta") return DirectKind::LowerEta;
    if (s == "upper-coresidual") return DirectKind::UpperCoResidual;
    if (s == "lower-residual") return DirectKind::LowerResidual;
    return std::nullopt;
}

ConnectiveKind required_connective(DirectKind k) {
    switch (k) {
        case DirectKind::UpperTheta: return ConnectiveKind::Overlap;
        case DirectKind::LowerEta: return ConnectiveKind::Grouping;
        case DirectKind::UpperCoResidual: return ConnectiveKind::CoResidualImplicator;
        case DirectKind::LowerResidual: return ConnectiveKind::ResidualImplicator;
    }
    throw std::logic_error("bad kind");
}

ConnectiveKind required_connective(InverseKind k) {
    switch (k) {
        case InverseKind::UpperResidual: return ConnectiveKind::ResidualImplicator;
        case InverseKind::LowerTheta: return ConnectiveKind::Overlap;
        case InverseKind::UpperEta: return ConnectiveKind::Grouping;
        case InverseKind::LowerCoResidual: return ConnectiveKind::CoResidualImplicator;
    }
    throw std::logic_error("bad kind");
}

bool needs_negator(DirectKind k) {
    return k == DirectKind::LowerEta || k == DirectKind::UpperCoResidual;
}

bool needs_negator(InverseKind k) {
    return k == InverseKind::UpperEta || k == InverseKind::LowerCoResidual;
}

bool is_upper(DirectKind k) {
    return k == DirectKind::UpperTheta || k == DirectKind::UpperCoResidual;
}

InverseKind paired_inverse(DirectKind k) {
    switch (k) {
        case DirectKind::UpperTheta: return InverseKind::UpperResidual;
        case DirectKind::LowerResidual: return InverseKind::LowerTheta;
        case DirectKind::UpperCoResidual: return InverseKind::UpperEta;
        case DirectKind::LowerEta: return InverseKind::LowerCoResidual;
    }
    throw std::logic_error("bad kind");
}

DirectKind paired_direct(InverseKind k) {
    switch (k) {
        case InverseKind::UpperResidual: return DirectKind::UpperTheta;
        case InverseKind::LowerTheta: return DirectKind::LowerResidual;
        case InverseKind::UpperEta: return DirectKind::UpperCoResidual;
        case InverseKind::LowerCoResidual: return DirectKind::LowerEta;
    }
    throw std::logic_error("bad kind");
}

namespace {

const Negator* check_wiring(const std::string& what, ConnectiveKind want_conn, bool want_neg,
                            const LFuzzyPartition& p, const BinaryConnective& conn,
                            const Negator* neg) {
    if (conn.kind() != want_conn)
        throw KindMismatchError(what + " needs a " + to_string(want_conn) + ", got " +
                                to_string(conn.kind()) + " '" + conn.name() + "'");
    if (&conn.lattice() != &p.lattice())
        throw CarrierMismatchError(what + ": connective carrier '" + conn.lattice().name() +
                                   "' differs from partition carrier '" + p.lattice().name() + "'");
    if (want_neg) {
        if (!neg) throw MissingNegatorError(what + " needs a negator");
        if (&neg->lattice() != &p.lattice())
            throw CarrierMismatchError(what + ": negator carrier '" + neg->lattice().name() +
                                       "' differs from partition carrier '" + p.lattice().name() +
                                       "'");
        return neg;
    }
    return nullptr; // a superfluous negator is ignored
}

} // namespace

DirectResult direct_transform(DirectKind kind, const LFuzzyPartition& p,
                              const BinaryConnective& conn, const Negator* neg,
                              const LFuzzySet& f) {
    const std::string what = "direct transform " + to_string(kind);
    const Negator* n = check_wiring(what, required_connective(kind), needs_negator(kind), p, conn, neg);
    require_compatible(p.member(0), f);

    const Lattice& lat = p.lattice();
    const std::size_t npts = f.size();
    const bool upper = kind == DirectKind::UpperTheta || kind == DirectKind::UpperCoResidual;

    DirectResult out;
    out.kind = kind;
    out.member_labels = p.labels();
    out.lattice = p.lattice_ptr();
    out.components.reserve(p.size());

    for (std::size_t j = 0; j < p.size(); ++j) {
        const LFuzzySet& a = p.member(j);
        Elem acc{};
        for (std::size_t x = 0; x < npts; ++x) {
            Elem weight = n ? n->apply(a.at(x)) : a.at(x);
            Elem term = conn.apply(weight, f.at(x));
            if (x == 0)
                acc = term;
            else
                acc = upper ? lat.join(acc, term) : lat.meet(acc, term);
        }
        out.components.push_back(acc);
    }
    return out;
}

LFuzzySet inverse_transform(InverseKind kind, const LFuzzyPartition& p,
                            const BinaryConnective& conn, const Negator* neg,
                            const DirectResult& components) {
    const std::string what = "inverse transform " + to_string(kind);
    if (components.kind != paired_direct(kind))
        throw KindMismatchError(what + " reconstructs from " + to_string(paired_direct(kind)) +
                                " components, got " + to_string(components.kind));
    const Negator* n = check_wiring(what, required_connective(kind), needs_negator(kind), p, conn, neg);
    if (components.lattice.get() != &p.lattice())
        throw CarrierMismatchError(what + ": components carrier '" + components.lattice->name() +
                                   "' differs from partition carrier '" + p.lattice().name() + "'");
    if (components.member_labels != p.labels())
        throw KindMismatchError(what + ": components were computed for different members");
    if (components.components.size() != p.size())
        throw KindMismatchError(what + ": component count differs from member count");

    const Lattice& lat = p.lattice();
    const std::size_t npts = p.universe().size();
    const bool upper = kind == InverseKind::UpperResidual || kind == InverseKind::UpperEta;

    std::vector<Elem> values;
    values.reserve(npts);
    for (std::size_t x = 0; x < npts; ++x) {
        Elem acc{};
        for (std::size_t j = 0; j < p.size(); ++j) {
            Elem weight = n ? n->apply(p.member(j).at(x)) : p.member(j).at(x);
            Elem term = conn.apply(weight, components.components[j]);
            if (j == 0)
                acc = term;
            else
                acc = upper ? lat.meet(acc, term) : lat.join(acc, term);
        }
        values.push_back(acc);
    }
    return LFuzzySet(p.universe_ptr(), p.lattice_ptr(), std::move(values));
}

LFuzzySet inverse_transform(const LFuzzyPartition& p, const BinaryConnective& conn,
                            const Negator* neg, const DirectResult& components) {
    return inverse_transform(paired_inverse(components.kind), p, conn, neg, components);
}

} // namespace lft
