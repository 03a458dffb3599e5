#pragma once

// Reference implementations of the transform folds and of residuation,
// written directly from the defining formulas with explicit accumulator
// loops seeded at the fold identities. The test suites compare the engine
// against these; they share nothing with the engine beyond the lattice
// primitives and raw data access, so a bug would have to be made twice,
// in different shapes, to go unnoticed.

#include <cstddef>
#include <functional>
#include <vector>

#include "lft/fuzzy.hpp"
#include "lft/lattice.hpp"
#include "lft/partition.hpp"
#include "lft/transforms.hpp"

namespace lft::oracle {

using Fn1 = std::function<Elem(Elem)>;
using Fn2 = std::function<Elem(Elem, Elem)>;

// Largest w with theta(u, w) <= v, by scanning the whole finite carrier.
inline Elem residual(const Lattice& lat, const Fn2& theta, Elem u, Elem v) {
    Elem acc = lat.bottom();
    for (std::size_t k = 0; k < lat.size(); ++k) {
        Elem w = lat.element(k);
        if (lat.leq(theta(u, w), v)) acc = lat.join(acc, w);
    }
    return acc;
}

// Least w with eta(u, w) >= v.
inline Elem coresidual(const Lattice& lat, const Fn2& eta, Elem u, Elem v) {
    Elem acc = lat.top();
    for (std::size_t k = 0; k < lat.size(); ++k) {
        Elem w = lat.element(k);
        if (lat.leq(v, eta(u, w))) acc = lat.meet(acc, w);
    }
    return acc;
}

// Direct transform: component j folds conn(weight_j(x), f(x)) over all x,
// joining for the upper kinds and meeting for the lower ones. The weight is
// the member value, run through `neg` for the two kinds defined that way.
inline std::vector<Elem> direct(DirectKind kind, const LFuzzyPartition& p, const Fn2& conn,
                                const Fn1& neg, const LFuzzySet& f) {
    const Lattice& lat = p.lattice();
    const bool upper = kind == DirectKind::UpperTheta || kind == DirectKind::UpperCoResidual;
    const bool negate = kind == DirectKind::LowerEta || kind == DirectKind::UpperCoResidual;
    std::vector<Elem> out;
    out.reserve(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        Elem acc = upper ? lat.bottom() : lat.top();
        for (std::size_t x = 0; x < f.size(); ++x) {
            Elem w = negate ? neg(p.member(j).at(x)) : p.member(j).at(x);
            Elem term = conn(w, f.at(x));
            acc = upper ? lat.join(acc, term) : lat.meet(acc, term);
        }
        out.push_back(acc);
    }
    return out;
}

// Inverse transform: point x folds conn(weight_j(x), F_j) over all members,
// meeting for the upper kinds and joining for the lower ones.
inline std::vector<Elem> inverse(InverseKind kind, const LFuzzyPartition& p, const Fn2& conn,
                                 const Fn1& neg, const std::vector<Elem>& components) {
    const Lattice& lat = p.lattice();
    const bool upper = kind == InverseKind::UpperResidual || kind == InverseKind::UpperEta;
    const bool negate = kind == InverseKind::UpperEta || kind == InverseKind::LowerCoResidual;
    std::vector<Elem> out;
    out.reserve(p.universe().size());
    for (std::size_t x = 0; x < p.universe().size(); ++x) {
        Elem acc = upper ? lat.top() : lat.bottom();
        for (std::size_t j = 0; j < p.size(); ++j) {
            Elem w = negate ? neg(p.member(j).at(x)) : p.member(j).at(x);
            Elem term = conn(w, components[j]);
            acc = upper ? lat.meet(acc, term) : lat.join(acc, term);
        }
        out.push_back(acc);
    }
    return out;
}

} // namespace lft::oracle
