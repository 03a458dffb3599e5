#include "lft/lawcheck.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "lft/systems.hpp"
#include "lft/transforms.hpp"
#include "lft/worked_example.hpp"

namespace lft {

std::string to_string(LawStatus s) {
    switch (s) {
        case LawStatus::Passed: return "passed";
        case LawStatus::Failed: return "failed";
        case LawStatus::HypothesisNotMet: return "hypothesis-not-met";
    }
    return "?";
}

namespace {

using Case = nlohmann::ordered_json;

struct LawOutcome {
    std::size_t cases = 0;
    std::optional<Case> witness;
    std::string detail;
};

// Resolved, pointer-based view of one context for one law run.
struct R {
    const LawContext* ctx = nullptr;
    std::shared_ptr<const Lattice> lat;
    const BinaryConnective* theta = nullptr;
    const BinaryConnective* eta = nullptr;
    const BinaryConnective* i_theta = nullptr;
    const BinaryConnective* i_eta = nullptr;
    const Negator* neg = nullptr;
    const LFuzzyPartition* part = nullptr;
    const LFuzzyPartition* part2 = nullptr;
    std::shared_ptr<const Universe> universe;
    std::size_t budget = 4096;
    std::uint64_t seed = 1;
};

enum Slot : unsigned {
    kTheta = 1u << 0,
    kEta = 1u << 1,
    kResImpl = 1u << 2,
    kCoresImpl = 1u << 3,
    kNegator = 1u << 4,
    kPartition = 1u << 5,
    kPartition2 = 1u << 6,
    kUniverse = 1u << 7,
};

using Emit = std::function<bool(const Case&)>;  // false stops the generator

struct Law {
    std::string id;
    std::string statement;
    unsigned slots = 0;
    std::function<std::vector<std::string>(const R&)> gate;  // null = unconditional
    std::function<std::optional<std::string>(const R&, const Case&)> check;
    std::function<void(const R&, const Emit&)> generate;
};

// ---------------------------------------------------------------- helpers

std::string lbl(const R& r, Elem e) { return r.lat->label(e); }

Elem case_elem(const R& r, const Case& c, const char* key) {
    const std::string text = c.at(key).get<std::string>();
    auto e = r.lat->parse(text);
    if (!e) throw ParseError("case refers to unknown element '" + text + "'");
    return *e;
}

Case set_json(const R& r, const LFuzzySet& f) {
    Case arr = Case::array();
    for (std::size_t i = 0; i < f.size(); ++i) arr.push_back(lbl(r, f.at(i)));
    return arr;
}

LFuzzySet set_from_json(const R& r, const Case& arr) {
    std::vector<Elem> vals;
    vals.reserve(arr.size());
    for (const auto& item : arr) {
        const std::string text = item.get<std::string>();
        auto e = r.lat->parse(text);
        if (!e) throw ParseError("case refers to unknown element '" + text + "'");
        vals.push_back(*e);
    }
    return LFuzzySet(r.universe, r.lat, std::move(vals));
}

LFuzzySet case_set(const R& r, const Case& c, const char* key) {
    return set_from_json(r, c.at(key));
}

std::vector<Elem> case_elems(const R& r, const Case& c, const char* key) {
    std::vector<Elem> out;
    for (const auto& item : c.at(key)) {
        const std::string text = item.get<std::string>();
        auto e = r.lat->parse(text);
        if (!e) throw ParseError("case refers to unknown element '" + text + "'");
        out.push_back(*e);
    }
    return out;
}

std::string render_set(const R& r, const LFuzzySet& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += lbl(r, f.at(i));
    }
    return out + ")";
}

std::vector<LFuzzySet> family_of(const R& r) {
    return enumerate_fuzzy_sets(r.lat, r.universe, r.budget, r.seed);
}

const BinaryConnective& conn_for(const R& r, DirectKind k) {
    switch (k) {
        case DirectKind::UpperTheta: return *r.theta;
        case DirectKind::LowerEta: return *r.eta;
        case DirectKind::UpperCoResidual: return *r.i_eta;
        case DirectKind::LowerResidual: return *r.i_theta;
    }
    return *r.theta;
}

// Components over the context partition with the context negator.
std::vector<Elem> dcomp(const R& r, DirectKind k, const LFuzzySet& f) {
    return direct_transform(k, *r.part, conn_for(r, k), needs_negator(k) ? r.neg : nullptr, f)
        .components;
}

// Same with an explicitly pinned negator.
std::vector<Elem> dcomp_n(const R& r, DirectKind k, const LFuzzySet& f, const Negator& n) {
    return direct_transform(k, *r.part, conn_for(r, k), needs_negator(k) ? &n : nullptr, f)
        .components;
}

// Same over an arbitrary partition.
std::vector<Elem> dcomp_p(const R& r, DirectKind k, const LFuzzyPartition& p, const LFuzzySet& f) {
    return direct_transform(k, p, conn_for(r, k), needs_negator(k) ? r.neg : nullptr, f).components;
}

DirectResult pack(const R& r, DirectKind k, std::vector<Elem> components) {
    DirectResult d;
    d.kind = k;
    d.member_labels = r.part->labels();
    d.components = std::move(components);
    d.lattice = r.lat;
    return d;
}

LFuzzySet inv(const R& r, InverseKind k, const BinaryConnective& conn, const Negator* n,
              const DirectResult& d) {
    return inverse_transform(k, *r.part, conn, n, d);
}

// ------------------------------------------------------------- predicates

bool is_involutive(const R& r, const Negator& n) {
    for (Elem e : r.lat->all_elements())
        if (!r.lat->equal(n.apply(n.apply(e)), e)) return false;
    return true;
}

bool exchange_of(const R& r, const BinaryConnective& c) {
    for (Elem u : r.lat->all_elements())
        for (Elem v : r.lat->all_elements())
            for (Elem w : r.lat->all_elements())
                if (!r.lat->equal(c.apply(u, c.apply(v, w)), c.apply(v, c.apply(u, w))))
                    return false;
    return true;
}

bool same_table(const R& r, const BinaryConnective& a, const BinaryConnective& b) {
    for (Elem u : r.lat->all_elements())
        for (Elem v : r.lat->all_elements())
            if (!r.lat->equal(a.apply(u, v), b.apply(u, v))) return false;
    return true;
}

bool dual_under(const R& r, const BinaryConnective& a, const BinaryConnective& b,
                const Negator& n) {
    for (Elem u : r.lat->all_elements())
        for (Elem v : r.lat->all_elements()) {
            if (!r.lat->equal(b.apply(n.apply(u), n.apply(v)), n.apply(a.apply(u, v))))
                return false;
            if (!r.lat->equal(a.apply(n.apply(u), n.apply(v)), n.apply(b.apply(u, v))))
                return false;
        }
    return true;
}

bool double_residuation(const R& r) {
    // meet over v of I_theta(I_theta(u,v), v) recovers u, for every u.
    for (Elem u : r.lat->all_elements()) {
        std::vector<Elem> parts;
        for (Elem v : r.lat->all_elements())
            parts.push_back(r.i_theta->apply(r.i_theta->apply(u, v), v));
        if (!r.lat->equal(r.lat->meet_of(parts), u)) return false;
    }
    return true;
}

std::vector<std::string> gate_p33_p34(const R& r) {
    std::vector<std::string> unmet;
    if (!is_involutive(r, *r.neg)) unmet.push_back("negator is not involutive");
    if (!dual_under(r, *r.theta, *r.eta, *r.neg))
        unmet.push_back("overlap and grouping maps are not dual under the negator");
    if (!same_table(r, *r.i_theta, derive_residual(*r.theta)))
        unmet.push_back("residual implicator is not the one derived from the overlap map");
    if (!same_table(r, *r.i_eta, derive_coresidual(*r.eta)))
        unmet.push_back("co-residual implicator is not the one derived from the grouping map");
    if (!exchange_of(r, *r.theta)) unmet.push_back("overlap map lacks the exchange principle");
    if (!exchange_of(r, *r.eta)) unmet.push_back("grouping map lacks the exchange principle");
    if (!double_residuation(r))
        unmet.push_back("double residuation through I_theta does not recover every element");
    return unmet;
}

// ------------------------------------------------------------- generators

void gen_single(const R&, const Emit& emit) { emit(Case::object()); }

void gen_elems(const R& r, const Emit& emit) {
    for (Elem u : r.lat->all_elements())
        if (!emit(Case{{"u", lbl(r, u)}})) return;
}

void gen_elem_pairs(const R& r, const Emit& emit) {
    for (Elem u : r.lat->all_elements())
        for (Elem v : r.lat->all_elements())
            if (!emit(Case{{"u", lbl(r, u)}, {"v", lbl(r, v)}})) return;
}

void gen_elem_triples(const R& r, const Emit& emit) {
    for (Elem u : r.lat->all_elements())
        for (Elem v : r.lat->all_elements())
            for (Elem w : r.lat->all_elements())
                if (!emit(Case{{"u", lbl(r, u)}, {"v", lbl(r, v)}, {"w", lbl(r, w)}})) return;
}

// (u, nonempty family of at most three elements), families as non-decreasing
// index tuples so each multiset appears once.
void gen_elem_families(const R& r, const Emit& emit) {
    const auto es = r.lat->all_elements();
    const std::size_t n = es.size();
    std::vector<std::vector<std::size_t>> tuples;
    for (std::size_t i = 0; i < n; ++i) tuples.push_back({i});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) tuples.push_back({i, j});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) tuples.push_back({i, j, k});
    for (Elem u : es)
        for (const auto& t : tuples) {
            Case vs = Case::array();
            for (std::size_t i : t) vs.push_back(lbl(r, es[i]));
            if (!emit(Case{{"u", lbl(r, u)}, {"vs", vs}})) return;
        }
}

void gen_sets(const R& r, const Emit& emit) {
    for (const auto& f : family_of(r))
        if (!emit(Case{{"f", set_json(r, f)}})) return;
}

constexpr std::size_t kPairCap = 262144;
constexpr std::size_t kPairSamples = 8192;

void gen_set_pairs(const R& r, const Emit& emit) {
    const auto family = family_of(r);
    const std::size_t n = family.size();
    if (n == 0) return;
    if (n <= kPairCap / n) {
        for (const auto& f : family)
            for (const auto& g : family)
                if (!emit(Case{{"f", set_json(r, f)}, {"g", set_json(r, g)}})) return;
    } else {
        std::mt19937_64 rng(r.seed + 1);
        for (std::size_t c = 0; c < kPairSamples; ++c) {
            const auto& f = family[static_cast<std::size_t>(rng() % n)];
            const auto& g = family[static_cast<std::size_t>(rng() % n)];
            if (!emit(Case{{"f", set_json(r, f)}, {"g", set_json(r, g)}})) return;
        }
    }
}

void gen_elem_sets(const R& r, const Emit& emit) {
    const auto family = family_of(r);
    for (Elem u : r.lat->all_elements())
        for (const auto& f : family)
            if (!emit(Case{{"u", lbl(r, u)}, {"f", set_json(r, f)}})) return;
}

void gen_members(const R& r, const Emit& emit) {
    for (std::size_t j = 0; j < r.part->size(); ++j)
        if (!emit(Case{{"member", r.part->label(j)}})) return;
}

// Seeded families of one to three enumerated sets.
void gen_set_families(const R& r, const Emit& emit) {
    const auto family = family_of(r);
    const std::size_t n = family.size();
    if (n == 0) return;
    std::mt19937_64 rng(r.seed + 2);
    for (std::size_t c = 0; c < r.budget; ++c) {
        const std::size_t size = 1 + c % 3;
        Case fs = Case::array();
        for (std::size_t i = 0; i < size; ++i)
            fs.push_back(set_json(r, family[static_cast<std::size_t>(rng() % n)]));
        if (!emit(Case{{"fs", fs}})) return;
    }
}

// -------------------------------------------------------------- law table

const std::vector<Law>& registry() {
    static const std::vector<Law> laws = [] {
        std::vector<Law> L;

        auto add = [&L](Law law) { L.push_back(std::move(law)); };

        // ----- adjointness ------------------------------------------------
        add({"L2.1",
             "theta(u,v) <= w iff u <= I_theta(v,w); eta(u,v) >= w iff u >= I_eta(v,w)",
             kTheta | kResImpl | kEta | kCoresImpl, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 Elem u = case_elem(r, c, "u"), v = case_elem(r, c, "v"), w = case_elem(r, c, "w");
                 const bool t1 = r.lat->leq(r.theta->apply(u, v), w);
                 const bool t2 = r.lat->leq(u, r.i_theta->apply(v, w));
                 if (t1 != t2)
                     return "theta(u,v) <= w is " + std::string(t1 ? "true" : "false") +
                            " but u <= I_theta(v,w) is " + (t2 ? "true" : "false");
                 const bool e1 = r.lat->leq(w, r.eta->apply(u, v));
                 const bool e2 = r.lat->leq(r.i_eta->apply(v, w), u);
                 if (e1 != e2)
                     return "eta(u,v) >= w is " + std::string(e1 ? "true" : "false") +
                            " but u >= I_eta(v,w) is " + (e2 ? "true" : "false");
                 return std::nullopt;
             },
             gen_elem_triples});

        // ----- residual implicator facts ----------------------------------
        add({"L2.2.i", "I_theta(0,0) = I_theta(1,1) = 1 and I_theta(1,0) = 0", kResImpl, nullptr,
             [](const R& r, const Case&) -> std::optional<std::string> {
                 const Elem b = r.lat->bottom(), t = r.lat->top();
                 if (!r.lat->equal(r.i_theta->apply(b, b), t))
                     return "I_theta(0,0) = " + lbl(r, r.i_theta->apply(b, b));
                 if (!r.lat->equal(r.i_theta->apply(t, t), t))
                     return "I_theta(1,1) = " + lbl(r, r.i_theta->apply(t, t));
                 if (!r.lat->equal(r.i_theta->apply(t, b), b))
                     return "I_theta(1,0) = " + lbl(r, r.i_theta->apply(t, b));
                 return std::nullopt;
             },
             gen_single});

        add({"L2.2.ii",
             "u <= v implies I_theta(u,w) >= I_theta(v,w) and I_theta(w,u) <= I_theta(w,v)",
             kResImpl, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 Elem u = case_elem(r, c, "u"), v = case_elem(r, c, "v"), w = case_elem(r, c, "w");
                 if (!r.lat->leq(u, v)) return std::nullopt;
                 if (!r.lat->leq(r.i_theta->apply(v, w), r.i_theta->apply(u, w)))
                     return "I_theta is not antitone in the first argument here";
                 if (!r.lat->leq(r.i_theta->apply(w, u), r.i_theta->apply(w, v)))
                     return "I_theta is not monotone in the second argument here";
                 return std::nullopt;
             },
             gen_elem_triples});

        add({"L2.2.iii",
             "[u <= v iff I_theta(u,v) = 1] and [I_theta(1,u) = u] each hold iff theta has "
             "neutral element 1",
             kTheta | kResImpl, nullptr,
             [](const R& r, const Case&) -> std::optional<std::string> {
                 const bool neutral = overlap_properties(*r.theta).has_neutral;
                 bool op = true, np = true;
                 for (Elem u : r.lat->all_elements()) {
                     if (!r.lat->equal(r.i_theta->apply(r.lat->top(), u), u)) np = false;
                     for (Elem v : r.lat->all_elements())
                         if (r.lat->leq(u, v) !=
                             r.lat->equal(r.i_theta->apply(u, v), r.lat->top()))
                             op = false;
                 }
                 if (op != neutral)
                     return std::string("ordering property is ") + (op ? "present" : "absent") +
                            " but theta " + (neutral ? "has" : "lacks") + " neutral 1";
                 if (np != neutral)
                     return std::string("neutrality property is ") + (np ? "present" : "absent") +
                            " but theta " + (neutral ? "has" : "lacks") + " neutral 1";
                 return std::nullopt;
             },
             gen_single});

        add({"L2.2.iv", "I_theta(u,u) = 1 for all u iff theta(1,u) <= u for all u",
             kTheta | kResImpl, nullptr,
             [](const R& r, const Case&) -> std::optional<std::string> {
                 bool ip = true, defl = true;
                 for (Elem u : r.lat->all_elements()) {
                     if (!r.lat->equal(r.i_theta->apply(u, u), r.lat->top())) ip = false;
                     if (!r.lat->leq(r.theta->apply(r.lat->top(), u), u)) defl = false;
                 }
                 if (ip != defl)
                     return std::string("identity property is ") + (ip ? "present" : "absent") +
                            " but deflation is " + (defl ? "present" : "absent");
                 return std::nullopt;
             },
             gen_single});

        add({"L2.2.v", "I_theta satisfies the exchange principle iff theta does",
             kTheta | kResImpl, nullptr,
             [](const R& r, const Case&) -> std::optional<std::string> {
                 const bool a = exchange_of(r, *r.i_theta), b = exchange_of(r, *r.theta);
                 if (a != b)
                     return std::string("exchange holds for I_theta: ") + (a ? "yes" : "no") +
                            ", for theta: " + (b ? "yes" : "no");
                 return std::nullopt;
             },
             gen_single});

        add({"L2.3.i",
             "theta(u,I_theta(u,v)) <= v; I_theta(u,theta(u,v)) >= v; I_theta(theta(u,v),0) = "
             "I_theta(u,I_theta(v,0))",
             kTheta | kResImpl, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 Elem u = case_elem(r, c, "u"), v = case_elem(r, c, "v");
                 const Elem b = r.lat->bottom();
                 if (!r.lat->leq(r.theta->apply(u, r.i_theta->apply(u, v)), v))
                     return "theta(u,I_theta(u,v)) = " +
                            lbl(r, r.theta->apply(u, r.i_theta->apply(u, v))) +
                            " is not below v";
                 if (!r.lat->leq(v, r.i_theta->apply(u, r.theta->apply(u, v))))
                     return "I_theta(u,theta(u,v)) = " +
                            lbl(r, r.i_theta->apply(u, r.theta->apply(u, v))) +
                            " is not above v";
                 Elem lhs = r.i_theta->apply(r.theta->apply(u, v), b);
                 Elem rhs = r.i_theta->apply(u, r.i_theta->apply(v, b));
                 if (!r.lat->equal(lhs, rhs))
                     return "I_theta(theta(u,v),0) = " + lbl(r, lhs) +
                            " but I_theta(u,I_theta(v,0)) = " + lbl(r, rhs);
                 return std::nullopt;
             },
             gen_elem_pairs});

        add({"L2.3.ii",
             "I_theta(u, meet of v_i) = meet of I_theta(u,v_i); I_theta(join of u_i, v) = meet "
             "of I_theta(u_i,v)",
             kResImpl, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 Elem u = case_elem(r, c, "u");
                 auto vs = case_elems(r, c, "vs");
                 std::vector<Elem> parts;
                 for (Elem v : vs) parts.push_back(r.i_theta->apply(u, v));
                 Elem lhs = r.i_theta->apply(u, r.lat->meet_of(vs));
                 if (!r.lat->equal(lhs, r.lat->meet_of(parts)))
                     return "I_theta(u, meet v_i) = " + lbl(r, lhs) +
                            " but the meet of I_theta(u,v_i) is " + lbl(r, r.lat->meet_of(parts));
                 parts.clear();
                 for (Elem v : vs) parts.push_back(r.i_theta->apply(v, u));
                 lhs = r.i_theta->apply(r.lat->join_of(vs), u);
                 if (!r.lat->equal(lhs, r.lat->meet_of(parts)))
                     return "I_theta(join u_i, v) = " + lbl(r, lhs) +
                            " but the meet of I_theta(u_i,v) is " + lbl(r, r.lat->meet_of(parts));
                 return std::nullopt;
             },
             gen_elem_families});

        add({"L2.3.iii", "I_theta(u, join of v_i) >= join of I_theta(u,v_i)", kResImpl, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 Elem u = case_elem(r, c, "u");
                 auto vs = case_elems(r, c, "vs");
                 std::vector<Elem> parts;
                 for (Elem v : vs) parts.push_back(r.i_theta->apply(u, v));
                 Elem lhs = r.i_theta->apply(u, r.lat->join_of(vs));
                 if (!r.lat->leq(r.lat->join_of(parts), lhs))
                     return "I_theta(u, join v_i) = " + lbl(r, lhs) +
                            " does not dominate the join " + lbl(r, r.lat->join_of(parts));
                 return std::nullopt;
             },
             gen_elem_families});

        add({"L2.3.iv",
             "theta satisfies exchange iff I_theta(theta(u,v),w) = I_theta(u,I_theta(v,w)) "
             "for all u,v,w",
             kTheta | kResImpl, nullptr,
             [](const R& r, const Case&) -> std::optional<std::string> {
                 const bool ep = exchange_of(r, *r.theta);
                 bool law = true;
                 for (Elem u : r.lat->all_elements())
                     for (Elem v : r.lat->all_elements())
                         for (Elem w : r.lat->all_elements())
                             if (!r.lat->equal(r.i_theta->apply(r.theta->apply(u, v), w),
                                               r.i_theta->apply(u, r.i_theta->apply(v, w))))
                                 law = false;
                 if (ep != law)
                     return std::string("exchange for theta is ") + (ep ? "present" : "absent") +
                            " but the composition law is " + (law ? "present" : "absent");
                 return std::nullopt;
             },
             gen_single});

        // ----- co-residual implicator facts (dual list) --------------------
        add({"D.i", "I_eta(0,0) = I_eta(1,1) = 0 and I_eta(0,1) = 1", kCoresImpl, nullptr,
             [](const R& r, const Case&) -> std::optional<std::string> {
                 const Elem b = r.lat->bottom(), t = r.lat->top();
                 if (!r.lat->equal(r.i_eta->apply(b, b), b))
                     return "I_eta(0,0) = " + lbl(r, r.i_eta->apply(b, b));
                 if (!r.lat->equal(r.i_eta->apply(t, t), b))
                     return "I_eta(1,1) = " + lbl(r, r.i_eta->apply(t, t));
                 if (!r.lat->equal(r.i_eta->apply(b, t), t))
                     return "I_eta(0,1) = " + lbl(r, r.i_eta->apply(b, t));
                 return std::nullopt;
             },
             gen_single});

        add({"D.ii", "u <= v implies I_eta(u,w) >= I_eta(v,w) and I_eta(w,u) <= I_eta(w,v)",
             kCoresImpl, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 Elem u = case_elem(r, c, "u"), v = case_elem(r, c, "v"), w = case_elem(r, c, "w");
                 if (!r.lat->leq(u, v)) return std::nullopt;
                 if (!r.lat->leq(r.i_eta->apply(v, w), r.i_eta->apply(u, w)))
                     return "I_eta is not antitone in the first argument here";
                 if (!r.lat->leq(r.i_eta->apply(w, u), r.i_eta->apply(w, v)))
                     return "I_eta is not monotone in the second argument here";
                 return std::nullopt;
             },
             gen_elem_triples});

        add({"D.iii",
             "[u >= v iff I_eta(u,v) = 0] and [I_eta(0,u) = u] each hold iff eta has neutral "
             "element 0",
             kEta | kCoresImpl, nullptr,
             [](const R& r, const Case&) -> std::optional<std::string> {
                 const bool neutral = grouping_properties(*r.eta).has_neutral;
                 bool op = true, np = true;
                 for (Elem u : r.lat->all_elements()) {
                     if (!r.lat->equal(r.i_eta->apply(r.lat->bottom(), u), u)) np = false;
                     for (Elem v : r.lat->all_elements())
                         if (r.lat->leq(v, u) !=
                             r.lat->equal(r.i_eta->apply(u, v), r.lat->bottom()))
                             op = false;
                 }
                 if (op != neutral)
                     return std::string("ordering property is ") + (op ? "present" : "absent") +
                            " but eta " + (neutral ? "has" : "lacks") + " neutral 0";
                 if (np != neutral)
                     return std::string("neutrality property is ") + (np ? "present" : "absent") +
                            " but eta " + (neutral ? "has" : "lacks") + " neutral 0";
                 return std::nullopt;
             },
             gen_single});

        add({"D.iv", "I_eta(u,u) = 0 for all u iff eta(0,u) >= u for all u", kEta | kCoresImpl,
             nullptr,
             [](const R& r, const Case&) -> std::optional<std::string> {
                 bool ip = true, infl = true;
                 for (Elem u : r.lat->all_elements()) {
                     if (!r.lat->equal(r.i_eta->apply(u, u), r.lat->bottom())) ip = false;
                     if (!r.lat->leq(u, r.eta->apply(r.lat->bottom(), u))) infl = false;
                 }
                 if (ip != infl)
                     return std::string("identity property is ") + (ip ? "present" : "absent") +
                            " but eta(0,u) >= u is " + (infl ? "present" : "absent");
                 return std::nullopt;
             },
             gen_single});

        add({"D.v", "I_eta satisfies the exchange principle iff eta does", kEta | kCoresImpl,
             nullptr,
             [](const R& r, const Case&) -> std::optional<std::string> {
                 const bool a = exchange_of(r, *r.i_eta), b = exchange_of(r, *r.eta);
                 if (a != b)
                     return std::string("exchange holds for I_eta: ") + (a ? "yes" : "no") +
                            ", for eta: " + (b ? "yes" : "no");
                 return std::nullopt;
             },
             gen_single});

        add({"D.vi",
             "eta(u,I_eta(u,v)) >= v; I_eta(u,eta(u,v)) <= v; I_eta(eta(u,v),1) = "
             "I_eta(u,I_eta(v,1))",
             kEta | kCoresImpl, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 Elem u = case_elem(r, c, "u"), v = case_elem(r, c, "v");
                 const Elem t = r.lat->top();
                 if (!r.lat->leq(v, r.eta->apply(u, r.i_eta->apply(u, v))))
                     return "eta(u,I_eta(u,v)) = " +
                            lbl(r, r.eta->apply(u, r.i_eta->apply(u, v))) + " is not above v";
                 if (!r.lat->leq(r.i_eta->apply(u, r.eta->apply(u, v)), v))
                     return "I_eta(u,eta(u,v)) = " +
                            lbl(r, r.i_eta->apply(u, r.eta->apply(u, v))) + " is not below v";
                 Elem lhs = r.i_eta->apply(r.eta->apply(u, v), t);
                 Elem rhs = r.i_eta->apply(u, r.i_eta->apply(v, t));
                 if (!r.lat->equal(lhs, rhs))
                     return "I_eta(eta(u,v),1) = " + lbl(r, lhs) +
                            " but I_eta(u,I_eta(v,1)) = " + lbl(r, rhs);
                 return std::nullopt;
             },
             gen_elem_pairs});

        add({"D.vii",
             "I_eta(u, join of v_i) = join of I_eta(u,v_i); I_eta(meet of u_i, v) = join of "
             "I_eta(u_i,v)",
             kCoresImpl, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 Elem u = case_elem(r, c, "u");
                 auto vs = case_elems(r, c, "vs");
                 std::vector<Elem> parts;
                 for (Elem v : vs) parts.push_back(r.i_eta->apply(u, v));
                 Elem lhs = r.i_eta->apply(u, r.lat->join_of(vs));
                 if (!r.lat->equal(lhs, r.lat->join_of(parts)))
                     return "I_eta(u, join v_i) = " + lbl(r, lhs) +
                            " but the join of I_eta(u,v_i) is " + lbl(r, r.lat->join_of(parts));
                 parts.clear();
                 for (Elem v : vs) parts.push_back(r.i_eta->apply(v, u));
                 lhs = r.i_eta->apply(r.lat->meet_of(vs), u);
                 if (!r.lat->equal(lhs, r.lat->join_of(parts)))
                     return "I_eta(meet u_i, v) = " + lbl(r, lhs) +
                            " but the join of I_eta(u_i,v) is " + lbl(r, r.lat->join_of(parts));
                 return std::nullopt;
             },
             gen_elem_families});

        add({"D.viii", "I_eta(u, meet of v_i) <= meet of I_eta(u,v_i)", kCoresImpl, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 Elem u = case_elem(r, c, "u");
                 auto vs = case_elems(r, c, "vs");
                 std::vector<Elem> parts;
                 for (Elem v : vs) parts.push_back(r.i_eta->apply(u, v));
                 Elem lhs = r.i_eta->apply(u, r.lat->meet_of(vs));
                 if (!r.lat->leq(lhs, r.lat->meet_of(parts)))
                     return "I_eta(u, meet v_i) = " + lbl(r, lhs) +
                            " is not below the meet " + lbl(r, r.lat->meet_of(parts));
                 return std::nullopt;
             },
             gen_elem_families});

        add({"D.ix",
             "eta satisfies exchange iff I_eta(eta(u,v),w) = I_eta(u,I_eta(v,w)) for all u,v,w",
             kEta | kCoresImpl, nullptr,
             [](const R& r, const Case&) -> std::optional<std::string> {
                 const bool ep = exchange_of(r, *r.eta);
                 bool law = true;
                 for (Elem u : r.lat->all_elements())
                     for (Elem v : r.lat->all_elements())
                         for (Elem w : r.lat->all_elements())
                             if (!r.lat->equal(r.i_eta->apply(r.eta->apply(u, v), w),
                                               r.i_eta->apply(u, r.i_eta->apply(v, w))))
                                 law = false;
                 if (ep != law)
                     return std::string("exchange for eta is ") + (ep ? "present" : "absent") +
                            " but the composition law is " + (law ? "present" : "absent");
                 return std::nullopt;
             },
             gen_single});

        // ----- transform dualities -----------------------------------------
        add({"P3.1",
             "upper-theta[f] = N(lower-eta[N f]) and lower-eta[f] = N(upper-theta[N f]) "
             "componentwise",
             kTheta | kEta | kNegator | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!is_involutive(r, *r.neg)) unmet.push_back("negator is not involutive");
                 if (!dual_under(r, *r.theta, *r.eta, *r.neg))
                     unmet.push_back("overlap and grouping maps are not dual under the negator");
                 return unmet;
             },
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 LFuzzySet nf = f.map(*r.neg);
                 auto up = dcomp(r, DirectKind::UpperTheta, f);
                 auto lo_n = dcomp(r, DirectKind::LowerEta, nf);
                 auto lo = dcomp(r, DirectKind::LowerEta, f);
                 auto up_n = dcomp(r, DirectKind::UpperTheta, nf);
                 for (std::size_t j = 0; j < up.size(); ++j) {
                     if (!r.lat->equal(up[j], r.neg->apply(lo_n[j])))
                         return "component " + r.part->label(j) + ": upper-theta[f] = " +
                                lbl(r, up[j]) + " but N(lower-eta[N f]) = " +
                                lbl(r, r.neg->apply(lo_n[j]));
                     if (!r.lat->equal(lo[j], r.neg->apply(up_n[j])))
                         return "component " + r.part->label(j) + ": lower-eta[f] = " +
                                lbl(r, lo[j]) + " but N(upper-theta[N f]) = " +
                                lbl(r, r.neg->apply(up_n[j]));
                 }
                 return std::nullopt;
             },
             gen_sets});

        add({"P3.2",
             "upper-coresidual[f] = N(lower-residual[N f]) and lower-residual[f] = "
             "N(upper-coresidual[N f]) componentwise",
             kResImpl | kCoresImpl | kNegator | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!is_involutive(r, *r.neg)) unmet.push_back("negator is not involutive");
                 if (!dual_under(r, *r.i_theta, *r.i_eta, *r.neg))
                     unmet.push_back("the implicators are not dual under the negator");
                 return unmet;
             },
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 LFuzzySet nf = f.map(*r.neg);
                 auto up = dcomp(r, DirectKind::UpperCoResidual, f);
                 auto lo_n = dcomp(r, DirectKind::LowerResidual, nf);
                 auto lo = dcomp(r, DirectKind::LowerResidual, f);
                 auto up_n = dcomp(r, DirectKind::UpperCoResidual, nf);
                 for (std::size_t j = 0; j < up.size(); ++j) {
                     if (!r.lat->equal(up[j], r.neg->apply(lo_n[j])))
                         return "component " + r.part->label(j) + ": upper-coresidual[f] = " +
                                lbl(r, up[j]) + " but N(lower-residual[N f]) = " +
                                lbl(r, r.neg->apply(lo_n[j]));
                     if (!r.lat->equal(lo[j], r.neg->apply(up_n[j])))
                         return "component " + r.part->label(j) + ": lower-residual[f] = " +
                                lbl(r, lo[j]) + " but N(upper-coresidual[N f]) = " +
                                lbl(r, r.neg->apply(up_n[j]));
                 }
                 return std::nullopt;
             },
             gen_sets});

        add({"P3.3",
             "lower-residual[f] = meet_u I_theta(upper-theta[I_theta(f,u)],u) and conversely; "
             "lower-eta[f] = join_u I_eta(upper-coresidual[I_eta(f,u)],u) and conversely",
             kTheta | kEta | kResImpl | kCoresImpl | kNegator | kPartition | kUniverse,
             gate_p33_p34,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 const std::size_t m = r.part->size();
                 std::vector<std::vector<Elem>> acc1(m), acc2(m), acc3(m), acc4(m);
                 for (Elem u : r.lat->all_elements()) {
                     LFuzzySet ft = LFuzzySet::combine_right(*r.i_theta, f, u);
                     LFuzzySet fe = LFuzzySet::combine_right(*r.i_eta, f, u);
                     auto t_up = dcomp(r, DirectKind::UpperTheta, ft);
                     auto t_lo = dcomp(r, DirectKind::LowerResidual, ft);
                     auto e_up = dcomp(r, DirectKind::UpperCoResidual, fe);
                     auto e_lo = dcomp(r, DirectKind::LowerEta, fe);
                     for (std::size_t j = 0; j < m; ++j) {
                         acc1[j].push_back(r.i_theta->apply(t_up[j], u));
                         acc2[j].push_back(r.i_theta->apply(t_lo[j], u));
                         acc3[j].push_back(r.i_eta->apply(e_up[j], u));
                         acc4[j].push_back(r.i_eta->apply(e_lo[j], u));
                     }
                 }
                 auto lo_t = dcomp(r, DirectKind::LowerResidual, f);
                 auto up_t = dcomp(r, DirectKind::UpperTheta, f);
                 auto lo_e = dcomp(r, DirectKind::LowerEta, f);
                 auto up_e = dcomp(r, DirectKind::UpperCoResidual, f);
                 for (std::size_t j = 0; j < m; ++j) {
                     if (!r.lat->equal(lo_t[j], r.lat->meet_of(acc1[j])))
                         return "component " + r.part->label(j) +
                                ": lower-residual[f] differs from meet_u "
                                "I_theta(upper-theta[I_theta(f,u)],u)";
                     if (!r.lat->equal(up_t[j], r.lat->meet_of(acc2[j])))
                         return "component " + r.part->label(j) +
                                ": upper-theta[f] differs from meet_u "
                                "I_theta(lower-residual[I_theta(f,u)],u)";
                     if (!r.lat->equal(lo_e[j], r.lat->join_of(acc3[j])))
                         return "component " + r.part->label(j) +
                                ": lower-eta[f] differs from join_u "
                                "I_eta(upper-coresidual[I_eta(f,u)],u)";
                     if (!r.lat->equal(up_e[j], r.lat->join_of(acc4[j])))
                         return "component " + r.part->label(j) +
                                ": upper-coresidual[f] differs from join_u "
                                "I_eta(lower-eta[I_eta(f,u)],u)";
                 }
                 return std::nullopt;
             },
             gen_sets});

        add({"P3.4",
             "each transform is recovered from its diagonal partner: e.g. upper-theta[f] = "
             "meet_u I_theta(N(upper-coresidual[I_eta(N f, N u)]),u), and the three analogues",
             kTheta | kEta | kResImpl | kCoresImpl | kNegator | kPartition | kUniverse,
             gate_p33_p34,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 LFuzzySet nf = f.map(*r.neg);
                 const std::size_t m = r.part->size();
                 std::vector<std::vector<Elem>> acc1(m), acc2(m), acc3(m), acc4(m);
                 for (Elem u : r.lat->all_elements()) {
                     // the inner set is N(I(f,u)) for the implicator of the side
                     // being recovered: I_eta(N f, N u) = N(I_theta(f,u)) feeds the
                     // I_theta-side folds, I_theta(N f, N u) = N(I_eta(f,u)) the
                     // I_eta-side ones
                     LFuzzySet h_eta = LFuzzySet::combine_right(*r.i_eta, nf, r.neg->apply(u));
                     LFuzzySet h_theta = LFuzzySet::combine_right(*r.i_theta, nf, r.neg->apply(u));
                     auto up_e = dcomp(r, DirectKind::UpperCoResidual, h_eta);
                     auto up_t = dcomp(r, DirectKind::UpperTheta, h_theta);
                     auto lo_t = dcomp(r, DirectKind::LowerResidual, h_theta);
                     auto lo_e = dcomp(r, DirectKind::LowerEta, h_eta);
                     for (std::size_t j = 0; j < m; ++j) {
                         acc1[j].push_back(r.i_theta->apply(r.neg->apply(up_e[j]), u));
                         acc2[j].push_back(r.i_eta->apply(r.neg->apply(up_t[j]), u));
                         acc3[j].push_back(r.i_eta->apply(r.neg->apply(lo_t[j]), u));
                         acc4[j].push_back(r.i_theta->apply(r.neg->apply(lo_e[j]), u));
                     }
                 }
                 auto up_t = dcomp(r, DirectKind::UpperTheta, f);
                 auto up_e = dcomp(r, DirectKind::UpperCoResidual, f);
                 auto lo_e = dcomp(r, DirectKind::LowerEta, f);
                 auto lo_t = dcomp(r, DirectKind::LowerResidual, f);
                 for (std::size_t j = 0; j < m; ++j) {
                     if (!r.lat->equal(up_t[j], r.lat->meet_of(acc1[j])))
                         return "component " + r.part->label(j) +
                                ": upper-theta[f] is not recovered from upper-coresidual";
                     if (!r.lat->equal(up_e[j], r.lat->join_of(acc2[j])))
                         return "component " + r.part->label(j) +
                                ": upper-coresidual[f] is not recovered from upper-theta";
                     if (!r.lat->equal(lo_e[j], r.lat->join_of(acc3[j])))
                         return "component " + r.part->label(j) +
                                ": lower-eta[f] is not recovered from lower-residual";
                     if (!r.lat->equal(lo_t[j], r.lat->meet_of(acc4[j])))
                         return "component " + r.part->label(j) +
                                ": lower-residual[f] is not recovered from lower-eta";
                 }
                 return std::nullopt;
             },
             gen_sets});

        add({"P3.5",
             "with N' = I_theta(.,0) involutive: upper-theta[f] = N'(lower-residual[N' f]) "
             "and lower-residual[f] = N'(upper-theta[N' f])",
             kTheta | kResImpl | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!is_involutive(r, induced_negator(*r.i_theta)))
                     unmet.push_back("the negator induced by I_theta is not involutive");
                 if (!same_table(r, *r.i_theta, derive_residual(*r.theta)))
                     unmet.push_back(
                         "residual implicator is not the one derived from the overlap map");
                 if (!exchange_of(r, *r.theta))
                     unmet.push_back("overlap map lacks the exchange principle");
                 return unmet;
             },
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 Negator n = induced_negator(*r.i_theta);
                 LFuzzySet nf = f.map(n);
                 auto up = dcomp(r, DirectKind::UpperTheta, f);
                 auto lo_n = dcomp(r, DirectKind::LowerResidual, nf);
                 auto lo = dcomp(r, DirectKind::LowerResidual, f);
                 auto up_n = dcomp(r, DirectKind::UpperTheta, nf);
                 for (std::size_t j = 0; j < up.size(); ++j) {
                     if (!r.lat->equal(up[j], n.apply(lo_n[j])))
                         return "component " + r.part->label(j) + ": upper-theta[f] = " +
                                lbl(r, up[j]) + " but N'(lower-residual[N' f]) = " +
                                lbl(r, n.apply(lo_n[j]));
                     if (!r.lat->equal(lo[j], n.apply(up_n[j])))
                         return "component " + r.part->label(j) + ": lower-residual[f] = " +
                                lbl(r, lo[j]) + " but N'(upper-theta[N' f]) = " +
                                lbl(r, n.apply(up_n[j]));
                 }
                 return std::nullopt;
             },
             gen_sets});

        add({"P3.6",
             "with N' = I_eta(.,1) involutive and both transforms read through N': "
             "lower-eta[f] = N'(upper-coresidual[N' f]) and upper-coresidual[f] = "
             "N'(lower-eta[N' f])",
             kEta | kCoresImpl | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!is_involutive(r, induced_negator(*r.i_eta)))
                     unmet.push_back("the negator induced by I_eta is not involutive");
                 if (!same_table(r, *r.i_eta, derive_coresidual(*r.eta)))
                     unmet.push_back(
                         "co-residual implicator is not the one derived from the grouping map");
                 if (!exchange_of(r, *r.eta))
                     unmet.push_back("grouping map lacks the exchange principle");
                 return unmet;
             },
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 Negator n = induced_negator(*r.i_eta);
                 LFuzzySet nf = f.map(n);
                 auto lo = dcomp_n(r, DirectKind::LowerEta, f, n);
                 auto up_n = dcomp_n(r, DirectKind::UpperCoResidual, nf, n);
                 auto up = dcomp_n(r, DirectKind::UpperCoResidual, f, n);
                 auto lo_n = dcomp_n(r, DirectKind::LowerEta, nf, n);
                 for (std::size_t j = 0; j < lo.size(); ++j) {
                     if (!r.lat->equal(lo[j], n.apply(up_n[j])))
                         return "component " + r.part->label(j) + ": lower-eta[f] = " +
                                lbl(r, lo[j]) + " but N'(upper-coresidual[N' f]) = " +
                                lbl(r, n.apply(up_n[j]));
                     if (!r.lat->equal(up[j], n.apply(lo_n[j])))
                         return "component " + r.part->label(j) + ": upper-coresidual[f] = " +
                                lbl(r, up[j]) + " but N'(lower-eta[N' f]) = " +
                                lbl(r, n.apply(lo_n[j]));
                 }
                 return std::nullopt;
             },
             gen_sets});

        add({"P3.7",
             "if every member of the first partition lies below every member of the second, "
             "upper transforms over the first lie below those over the second and lower "
             "transforms lie above",
             kTheta | kEta | kResImpl | kCoresImpl | kNegator | kPartition | kPartition2 |
                 kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!r.part->universe().same_as(r.part2->universe())) {
                     unmet.push_back("the two partitions live on different universes");
                     return unmet;
                 }
                 for (std::size_t j = 0; j < r.part->size(); ++j)
                     for (std::size_t k = 0; k < r.part2->size(); ++k)
                         if (!r.part->member(j).leq(r.part2->member(k))) {
                             unmet.push_back("member " + r.part->label(j) +
                                             " is not below member " + r.part2->label(k));
                             return unmet;
                         }
                 return unmet;
             },
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 auto a_ut = dcomp(r, DirectKind::UpperTheta, f);
                 auto a_le = dcomp(r, DirectKind::LowerEta, f);
                 auto a_uc = dcomp(r, DirectKind::UpperCoResidual, f);
                 auto a_lr = dcomp(r, DirectKind::LowerResidual, f);
                 auto b_ut = dcomp_p(r, DirectKind::UpperTheta, *r.part2, f);
                 auto b_le = dcomp_p(r, DirectKind::LowerEta, *r.part2, f);
                 auto b_uc = dcomp_p(r, DirectKind::UpperCoResidual, *r.part2, f);
                 auto b_lr = dcomp_p(r, DirectKind::LowerResidual, *r.part2, f);
                 for (std::size_t j = 0; j < a_ut.size(); ++j)
                     for (std::size_t k = 0; k < b_ut.size(); ++k) {
                         if (!r.lat->leq(a_ut[j], b_ut[k]))
                             return "upper-theta: component " + r.part->label(j) + " = " +
                                    lbl(r, a_ut[j]) + " is not below " + r.part2->label(k) +
                                    " = " + lbl(r, b_ut[k]);
                         if (!r.lat->leq(b_le[k], a_le[j]))
                             return "lower-eta: component " + r.part->label(j) + " = " +
                                    lbl(r, a_le[j]) + " is not above " + r.part2->label(k) +
                                    " = " + lbl(r, b_le[k]);
                         if (!r.lat->leq(a_uc[j], b_uc[k]))
                             return "upper-coresidual: component " + r.part->label(j) + " = " +
                                    lbl(r, a_uc[j]) + " is not below " + r.part2->label(k) +
                                    " = " + lbl(r, b_uc[k]);
                         if (!r.lat->leq(b_lr[k], a_lr[j]))
                             return "lower-residual: component " + r.part->label(j) + " = " +
                                    lbl(r, a_lr[j]) + " is not above " + r.part2->label(k) +
                                    " = " + lbl(r, b_lr[k]);
                     }
                 return std::nullopt;
             },
             gen_sets});

        add({"P3.8",
             "at a core point x of member j: upper-theta_j[f] >= theta(1,f(x)); lower-eta_j[f] "
             "<= eta(0,f(x)); upper-coresidual_j[f] >= I_eta(0,f(x)); lower-residual_j[f] <= "
             "I_theta(1,f(x))",
             kTheta | kEta | kResImpl | kCoresImpl | kNegator | kPartition | kUniverse, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 auto ut = dcomp(r, DirectKind::UpperTheta, f);
                 auto le = dcomp(r, DirectKind::LowerEta, f);
                 auto uc = dcomp(r, DirectKind::UpperCoResidual, f);
                 auto lr = dcomp(r, DirectKind::LowerResidual, f);
                 const Elem b = r.lat->bottom(), t = r.lat->top();
                 for (std::size_t j = 0; j < r.part->size(); ++j)
                     for (std::size_t x : r.part->core(j)) {
                         Elem fx = f.at(x);
                         if (!r.lat->leq(r.theta->apply(t, fx), ut[j]))
                             return "upper-theta_" + r.part->label(j) + " = " + lbl(r, ut[j]) +
                                    " is below theta(1,f(" + r.part->universe().point(x) + "))";
                         if (!r.lat->leq(le[j], r.eta->apply(b, fx)))
                             return "lower-eta_" + r.part->label(j) + " = " + lbl(r, le[j]) +
                                    " is above eta(0,f(" + r.part->universe().point(x) + "))";
                         if (!r.lat->leq(r.i_eta->apply(b, fx), uc[j]))
                             return "upper-coresidual_" + r.part->label(j) + " = " +
                                    lbl(r, uc[j]) + " is below I_eta(0,f(" +
                                    r.part->universe().point(x) + "))";
                         if (!r.lat->leq(lr[j], r.i_theta->apply(t, fx)))
                             return "lower-residual_" + r.part->label(j) + " = " +
                                    lbl(r, lr[j]) + " is above I_theta(1,f(" +
                                    r.part->universe().point(x) + "))";
                     }
                 return std::nullopt;
             },
             gen_sets});

        add({"C3.1",
             "with neutral connectives and neutral implicators, components sandwich f at core "
             "points: upper >= f(x) >= lower",
             kTheta | kEta | kResImpl | kCoresImpl | kNegator | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!overlap_properties(*r.theta).has_neutral)
                     unmet.push_back("overlap map has no neutral element 1");
                 if (!grouping_properties(*r.eta).has_neutral)
                     unmet.push_back("grouping map has no neutral element 0");
                 if (!residual_properties(*r.i_theta).neutrality)
                     unmet.push_back("residual implicator lacks I_theta(1,u) = u");
                 if (!coresidual_properties(*r.i_eta).neutrality)
                     unmet.push_back("co-residual implicator lacks I_eta(0,u) = u");
                 return unmet;
             },
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 auto ut = dcomp(r, DirectKind::UpperTheta, f);
                 auto le = dcomp(r, DirectKind::LowerEta, f);
                 auto uc = dcomp(r, DirectKind::UpperCoResidual, f);
                 auto lr = dcomp(r, DirectKind::LowerResidual, f);
                 for (std::size_t j = 0; j < r.part->size(); ++j)
                     for (std::size_t x : r.part->core(j)) {
                         Elem fx = f.at(x);
                         if (!r.lat->leq(fx, ut[j]) || !r.lat->leq(le[j], fx))
                             return "member " + r.part->label(j) + " at " +
                                    r.part->universe().point(x) +
                                    ": upper-theta/lower-eta do not sandwich f(x)";
                         if (!r.lat->leq(fx, uc[j]) || !r.lat->leq(lr[j], fx))
                             return "member " + r.part->label(j) + " at " +
                                    r.part->universe().point(x) +
                                    ": upper-coresidual/lower-residual do not sandwich f(x)";
                     }
                 return std::nullopt;
             },
             gen_sets});

        add({"P3.9",
             "f <= g implies every direct transform of f lies componentwise below the same "
             "transform of g",
             kTheta | kEta | kResImpl | kCoresImpl | kNegator | kPartition | kUniverse, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 LFuzzySet g = case_set(r, c, "g");
                 if (!f.leq(g)) return std::nullopt;
                 for (DirectKind k : {DirectKind::UpperTheta, DirectKind::LowerEta,
                                      DirectKind::UpperCoResidual, DirectKind::LowerResidual}) {
                     auto a = dcomp(r, k, f);
                     auto b = dcomp(r, k, g);
                     for (std::size_t j = 0; j < a.size(); ++j)
                         if (!r.lat->leq(a[j], b[j]))
                             return to_string(k) + " component " + r.part->label(j) + ": " +
                                    lbl(r, a[j]) + " is not below " + lbl(r, b[j]);
                 }
                 return std::nullopt;
             },
             gen_set_pairs});

        add({"P3.10",
             "F_j[C(u,f)] = C(u, F_j[f]) for each transform with its own connective C",
             kTheta | kEta | kResImpl | kCoresImpl | kNegator | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!exchange_of(r, *r.theta))
                     unmet.push_back("overlap map lacks the exchange principle");
                 if (!exchange_of(r, *r.eta))
                     unmet.push_back("grouping map lacks the exchange principle");
                 if (!exchange_of(r, *r.i_theta))
                     unmet.push_back("residual implicator lacks the exchange principle");
                 if (!exchange_of(r, *r.i_eta))
                     unmet.push_back("co-residual implicator lacks the exchange principle");
                 return unmet;
             },
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 Elem u = case_elem(r, c, "u");
                 LFuzzySet f = case_set(r, c, "f");
                 for (DirectKind k : {DirectKind::UpperTheta, DirectKind::LowerEta,
                                      DirectKind::UpperCoResidual, DirectKind::LowerResidual}) {
                     const BinaryConnective& C = conn_for(r, k);
                     auto lhs = dcomp(r, k, LFuzzySet::combine_left(C, u, f));
                     auto base = dcomp(r, k, f);
                     for (std::size_t j = 0; j < lhs.size(); ++j)
                         if (!r.lat->equal(lhs[j], C.apply(u, base[j])))
                             return to_string(k) + " component " + r.part->label(j) +
                                    ": F[C(u,f)] = " + lbl(r, lhs[j]) + " but C(u,F[f]) = " +
                                    lbl(r, C.apply(u, base[j]));
                 }
                 return std::nullopt;
             },
             gen_elem_sets});

        add({"P3.11",
             "upper transforms send pointwise joins of families to joins of components; lower "
             "transforms do the same with meets",
             kTheta | kEta | kResImpl | kCoresImpl | kNegator | kPartition | kUniverse, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 std::vector<LFuzzySet> fs;
                 for (const auto& item : c.at("fs")) fs.push_back(set_from_json(r, item));
                 if (fs.empty()) return std::nullopt;
                 LFuzzySet joined = fs.front(), met = fs.front();
                 for (std::size_t i = 1; i < fs.size(); ++i) {
                     joined = LFuzzySet::join(joined, fs[i]);
                     met = LFuzzySet::meet(met, fs[i]);
                 }
                 for (DirectKind k : {DirectKind::UpperTheta, DirectKind::UpperCoResidual}) {
                     auto lhs = dcomp(r, k, joined);
                     std::vector<std::vector<Elem>> per(lhs.size());
                     for (const auto& f : fs) {
                         auto comp = dcomp(r, k, f);
                         for (std::size_t j = 0; j < comp.size(); ++j) per[j].push_back(comp[j]);
                     }
                     for (std::size_t j = 0; j < lhs.size(); ++j)
                         if (!r.lat->equal(lhs[j], r.lat->join_of(per[j])))
                             return to_string(k) + " component " + r.part->label(j) +
                                    ": transform of the join differs from the join of "
                                    "transforms";
                 }
                 for (DirectKind k : {DirectKind::LowerEta, DirectKind::LowerResidual}) {
                     auto lhs = dcomp(r, k, met);
                     std::vector<std::vector<Elem>> per(lhs.size());
                     for (const auto& f : fs) {
                         auto comp = dcomp(r, k, f);
                         for (std::size_t j = 0; j < comp.size(); ++j) per[j].push_back(comp[j]);
                     }
                     for (std::size_t j = 0; j < lhs.size(); ++j)
                         if (!r.lat->equal(lhs[j], r.lat->meet_of(per[j])))
                             return to_string(k) + " component " + r.part->label(j) +
                                    ": transform of the meet differs from the meet of "
                                    "transforms";
                 }
                 return std::nullopt;
             },
             gen_set_families});

        add({"P3.12",
             "on the constant u: upper-theta_j = theta(1,u); lower-residual_j = I_theta(1,u); "
             "lower-eta_j = eta(meet_x N(A_j(x)),u) = eta(0,u); upper-coresidual_j = "
             "I_eta(meet_x N(A_j(x)),u) = I_eta(0,u)",
             kTheta | kEta | kResImpl | kCoresImpl | kNegator | kPartition | kUniverse, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 Elem u = case_elem(r, c, "u");
                 LFuzzySet cu = LFuzzySet::constant(r.universe, r.lat, u);
                 auto ut = dcomp(r, DirectKind::UpperTheta, cu);
                 auto le = dcomp(r, DirectKind::LowerEta, cu);
                 auto uc = dcomp(r, DirectKind::UpperCoResidual, cu);
                 auto lr = dcomp(r, DirectKind::LowerResidual, cu);
                 const Elem b = r.lat->bottom(), t = r.lat->top();
                 for (std::size_t j = 0; j < r.part->size(); ++j) {
                     std::vector<Elem> negs;
                     for (std::size_t x = 0; x < r.universe->size(); ++x)
                         negs.push_back(r.neg->apply(r.part->member(j).at(x)));
                     Elem m = r.lat->meet_of(negs);
                     if (!r.lat->equal(ut[j], r.theta->apply(t, u)))
                         return "upper-theta_" + r.part->label(j) + "[const " + lbl(r, u) +
                                "] = " + lbl(r, ut[j]) + ", expected theta(1,u) = " +
                                lbl(r, r.theta->apply(t, u));
                     if (!r.lat->equal(lr[j], r.i_theta->apply(t, u)))
                         return "lower-residual_" + r.part->label(j) + "[const " + lbl(r, u) +
                                "] = " + lbl(r, lr[j]) + ", expected I_theta(1,u) = " +
                                lbl(r, r.i_theta->apply(t, u));
                     if (!r.lat->equal(le[j], r.eta->apply(m, u)) ||
                         !r.lat->equal(le[j], r.eta->apply(b, u)))
                         return "lower-eta_" + r.part->label(j) + "[const " + lbl(r, u) +
                                "] = " + lbl(r, le[j]) + ", expected eta(meet N(A),u) = " +
                                lbl(r, r.eta->apply(m, u)) + " = eta(0,u) = " +
                                lbl(r, r.eta->apply(b, u));
                     if (!r.lat->equal(uc[j], r.i_eta->apply(m, u)) ||
                         !r.lat->equal(uc[j], r.i_eta->apply(b, u)))
                         return "upper-coresidual_" + r.part->label(j) + "[const " + lbl(r, u) +
                                "] = " + lbl(r, uc[j]) + ", expected I_eta(meet N(A),u) = " +
                                lbl(r, r.i_eta->apply(m, u)) + " = I_eta(0,u) = " +
                                lbl(r, r.i_eta->apply(b, u));
                 }
                 return std::nullopt;
             },
             gen_elems});

        add({"C3.2", "with neutral elements, upper-theta and lower-eta fix constants",
             kTheta | kEta | kNegator | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!overlap_properties(*r.theta).has_neutral)
                     unmet.push_back("overlap map has no neutral element 1");
                 if (!grouping_properties(*r.eta).has_neutral)
                     unmet.push_back("grouping map has no neutral element 0");
                 return unmet;
             },
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 Elem u = case_elem(r, c, "u");
                 LFuzzySet cu = LFuzzySet::constant(r.universe, r.lat, u);
                 auto ut = dcomp(r, DirectKind::UpperTheta, cu);
                 auto le = dcomp(r, DirectKind::LowerEta, cu);
                 for (std::size_t j = 0; j < ut.size(); ++j) {
                     if (!r.lat->equal(ut[j], u))
                         return "upper-theta_" + r.part->label(j) + "[const " + lbl(r, u) +
                                "] = " + lbl(r, ut[j]);
                     if (!r.lat->equal(le[j], u))
                         return "lower-eta_" + r.part->label(j) + "[const " + lbl(r, u) +
                                "] = " + lbl(r, le[j]);
                 }
                 return std::nullopt;
             },
             gen_elems});

        add({"C3.3",
             "with neutral implicators, upper-coresidual and lower-residual fix constants",
             kResImpl | kCoresImpl | kNegator | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!residual_properties(*r.i_theta).neutrality)
                     unmet.push_back("residual implicator lacks I_theta(1,u) = u");
                 if (!coresidual_properties(*r.i_eta).neutrality)
                     unmet.push_back("co-residual implicator lacks I_eta(0,u) = u");
                 return unmet;
             },
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 Elem u = case_elem(r, c, "u");
                 LFuzzySet cu = LFuzzySet::constant(r.universe, r.lat, u);
                 auto uc = dcomp(r, DirectKind::UpperCoResidual, cu);
                 auto lr = dcomp(r, DirectKind::LowerResidual, cu);
                 for (std::size_t j = 0; j < uc.size(); ++j) {
                     if (!r.lat->equal(uc[j], u))
                         return "upper-coresidual_" + r.part->label(j) + "[const " + lbl(r, u) +
                                "] = " + lbl(r, uc[j]);
                     if (!r.lat->equal(lr[j], u))
                         return "lower-residual_" + r.part->label(j) + "[const " + lbl(r, u) +
                                "] = " + lbl(r, lr[j]);
                 }
                 return std::nullopt;
             },
             gen_elems});

        add({"P3.13",
             "lower-eta_j sends every constant u to eta(0,u) iff it sends the constant bottom "
             "to bottom; upper-coresidual_j sends every constant u to I_eta(0,u) iff it sends "
             "the constant top to top",
             kEta | kCoresImpl | kNegator | kPartition | kUniverse, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 const std::string label = c.at("member").get<std::string>();
                 auto jo = r.part->index_of(label);
                 if (!jo) throw ParseError("case refers to unknown member '" + label + "'");
                 const std::size_t j = *jo;
                 const Elem b = r.lat->bottom(), t = r.lat->top();
                 bool all_eta = true, all_ie = true;
                 for (Elem u : r.lat->all_elements()) {
                     LFuzzySet cu = LFuzzySet::constant(r.universe, r.lat, u);
                     if (!r.lat->equal(dcomp(r, DirectKind::LowerEta, cu)[j],
                                       r.eta->apply(b, u)))
                         all_eta = false;
                     if (!r.lat->equal(dcomp(r, DirectKind::UpperCoResidual, cu)[j],
                                       r.i_eta->apply(b, u)))
                         all_ie = false;
                 }
                 const bool bot_fixed = r.lat->equal(
                     dcomp(r, DirectKind::LowerEta, LFuzzySet::constant(r.universe, r.lat, b))[j],
                     b);
                 const bool top_fixed = r.lat->equal(
                     dcomp(r, DirectKind::UpperCoResidual,
                           LFuzzySet::constant(r.universe, r.lat, t))[j],
                     t);
                 if (all_eta != bot_fixed)
                     return "member " + label + ": lower-eta fixes constants to eta(0,u): " +
                            (all_eta ? "yes" : "no") + ", sends constant bottom to bottom: " +
                            (bot_fixed ? "yes" : "no");
                 if (all_ie != top_fixed)
                     return "member " + label +
                            ": upper-coresidual fixes constants to I_eta(0,u): " +
                            (all_ie ? "yes" : "no") + ", sends constant top to top: " +
                            (top_fixed ? "yes" : "no");
                 return std::nullopt;
             },
             gen_members});

        add({"P3.14",
             "upper-theta_j[f] is the least u with theta(A_j(x),f(x)) <= u for all x; "
             "lower-eta_j[f] is the greatest v with v <= eta(N(A_j(x)),f(x)) for all x",
             kTheta | kEta | kNegator | kPartition | kUniverse, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 auto ut = dcomp(r, DirectKind::UpperTheta, f);
                 auto le = dcomp(r, DirectKind::LowerEta, f);
                 for (std::size_t j = 0; j < r.part->size(); ++j) {
                     for (Elem u : r.lat->all_elements()) {
                         bool in_U = true, in_V = true;
                         for (std::size_t x = 0; x < f.size(); ++x) {
                             if (!r.lat->leq(r.theta->apply(r.part->member(j).at(x), f.at(x)), u))
                                 in_U = false;
                             if (!r.lat->leq(u, r.eta->apply(
                                                    r.neg->apply(r.part->member(j).at(x)),
                                                    f.at(x))))
                                 in_V = false;
                         }
                         if (in_U && !r.lat->leq(ut[j], u))
                             return "upper-theta_" + r.part->label(j) + " = " + lbl(r, ut[j]) +
                                    " is not below the bound " + lbl(r, u);
                         if (in_V && !r.lat->leq(u, le[j]))
                             return "lower-eta_" + r.part->label(j) + " = " + lbl(r, le[j]) +
                                    " is not above the bound " + lbl(r, u);
                     }
                     // Membership of the components in their own bound sets.
                     for (std::size_t x = 0; x < f.size(); ++x) {
                         if (!r.lat->leq(r.theta->apply(r.part->member(j).at(x), f.at(x)), ut[j]))
                             return "upper-theta_" + r.part->label(j) +
                                    " is not an upper bound of its own fold";
                         if (!r.lat->leq(le[j], r.eta->apply(
                                                    r.neg->apply(r.part->member(j).at(x)),
                                                    f.at(x))))
                             return "lower-eta_" + r.part->label(j) +
                                    " is not a lower bound of its own fold";
                     }
                 }
                 return std::nullopt;
             },
             gen_sets});

        add({"P3.15",
             "upper-coresidual_j[f] is the least u with I_eta(N(A_j(x)),f(x)) <= u for all x; "
             "lower-residual_j[f] is the greatest v with v <= I_theta(A_j(x),f(x)) for all x",
             kResImpl | kCoresImpl | kNegator | kPartition | kUniverse, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 auto uc = dcomp(r, DirectKind::UpperCoResidual, f);
                 auto lr = dcomp(r, DirectKind::LowerResidual, f);
                 for (std::size_t j = 0; j < r.part->size(); ++j) {
                     for (Elem u : r.lat->all_elements()) {
                         bool in_U = true, in_V = true;
                         for (std::size_t x = 0; x < f.size(); ++x) {
                             if (!r.lat->leq(r.i_eta->apply(
                                                 r.neg->apply(r.part->member(j).at(x)), f.at(x)),
                                             u))
                                 in_U = false;
                             if (!r.lat->leq(u, r.i_theta->apply(r.part->member(j).at(x),
                                                                 f.at(x))))
                                 in_V = false;
                         }
                         if (in_U && !r.lat->leq(uc[j], u))
                             return "upper-coresidual_" + r.part->label(j) + " = " +
                                    lbl(r, uc[j]) + " is not below the bound " + lbl(r, u);
                         if (in_V && !r.lat->leq(u, lr[j]))
                             return "lower-residual_" + r.part->label(j) + " = " +
                                    lbl(r, lr[j]) + " is not above the bound " + lbl(r, u);
                     }
                     for (std::size_t x = 0; x < f.size(); ++x) {
                         if (!r.lat->leq(r.i_eta->apply(r.neg->apply(r.part->member(j).at(x)),
                                                        f.at(x)),
                                         uc[j]))
                             return "upper-coresidual_" + r.part->label(j) +
                                    " is not an upper bound of its own fold";
                         if (!r.lat->leq(lr[j],
                                         r.i_theta->apply(r.part->member(j).at(x), f.at(x))))
                             return "lower-residual_" + r.part->label(j) +
                                    " is not a lower bound of its own fold";
                     }
                 }
                 return std::nullopt;
             },
             gen_sets});

        add({"P3.16",
             "with identity-principled implicators: meet_x I_theta(theta(A_j(x),f(x)),u) = 1 "
             "for every upper bound u and upper-theta_j[f] is the least such; meet_x "
             "I_eta(eta(N(A_j(x)),f(x)),v) = 0 for every lower bound v and lower-eta_j[f] is "
             "the greatest such",
             kTheta | kEta | kResImpl | kCoresImpl | kNegator | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!residual_properties(*r.i_theta).identity)
                     unmet.push_back("residual implicator lacks I_theta(u,u) = 1");
                 if (!coresidual_properties(*r.i_eta).identity)
                     unmet.push_back("co-residual implicator lacks I_eta(u,u) = 0");
                 return unmet;
             },
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 auto ut = dcomp(r, DirectKind::UpperTheta, f);
                 auto le = dcomp(r, DirectKind::LowerEta, f);
                 for (std::size_t j = 0; j < r.part->size(); ++j) {
                     for (Elem u : r.lat->all_elements()) {
                         bool in_U = true, in_V = true;
                         std::vector<Elem> iu, iv;
                         for (std::size_t x = 0; x < f.size(); ++x) {
                             Elem tv = r.theta->apply(r.part->member(j).at(x), f.at(x));
                             Elem ev =
                                 r.eta->apply(r.neg->apply(r.part->member(j).at(x)), f.at(x));
                             if (!r.lat->leq(tv, u)) in_U = false;
                             if (!r.lat->leq(u, ev)) in_V = false;
                             iu.push_back(r.i_theta->apply(tv, u));
                             iv.push_back(r.i_eta->apply(ev, u));
                         }
                         if (in_U) {
                             if (!r.lat->equal(r.lat->meet_of(iu), r.lat->top()))
                                 return "bound " + lbl(r, u) + " for member " +
                                        r.part->label(j) +
                                        ": meet_x I_theta(theta(A,f),u) is not 1";
                             if (!r.lat->leq(ut[j], u))
                                 return "upper-theta_" + r.part->label(j) +
                                        " is not least among the bounds";
                         }
                         if (in_V) {
                             if (!r.lat->equal(r.lat->meet_of(iv), r.lat->bottom()))
                                 return "bound " + lbl(r, u) + " for member " +
                                        r.part->label(j) +
                                        ": meet_x I_eta(eta(N(A),f),v) is not 0";
                             if (!r.lat->leq(u, le[j]))
                                 return "lower-eta_" + r.part->label(j) +
                                        " is not greatest among the bounds";
                         }
                     }
                 }
                 return std::nullopt;
             },
             gen_sets});

        add({"P3.17",
             "with identity-principled implicators: meet_x I_eta(u,I_eta(N(A_j(x)),f(x))) = 0 "
             "for every upper bound u and upper-coresidual_j[f] is the least such; meet_x "
             "I_theta(v,I_theta(A_j(x),f(x))) = 1 for every lower bound v and "
             "lower-residual_j[f] is the greatest such",
             kResImpl | kCoresImpl | kNegator | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!residual_properties(*r.i_theta).identity)
                     unmet.push_back("residual implicator lacks I_theta(u,u) = 1");
                 if (!coresidual_properties(*r.i_eta).identity)
                     unmet.push_back("co-residual implicator lacks I_eta(u,u) = 0");
                 return unmet;
             },
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 auto uc = dcomp(r, DirectKind::UpperCoResidual, f);
                 auto lr = dcomp(r, DirectKind::LowerResidual, f);
                 for (std::size_t j = 0; j < r.part->size(); ++j) {
                     for (Elem u : r.lat->all_elements()) {
                         bool in_U = true, in_V = true;
                         std::vector<Elem> iu, iv;
                         for (std::size_t x = 0; x < f.size(); ++x) {
                             Elem ev = r.i_eta->apply(r.neg->apply(r.part->member(j).at(x)),
                                                      f.at(x));
                             Elem tv = r.i_theta->apply(r.part->member(j).at(x), f.at(x));
                             if (!r.lat->leq(ev, u)) in_U = false;
                             if (!r.lat->leq(u, tv)) in_V = false;
                             iu.push_back(r.i_eta->apply(u, ev));
                             iv.push_back(r.i_theta->apply(u, tv));
                         }
                         if (in_U) {
                             if (!r.lat->equal(r.lat->meet_of(iu), r.lat->bottom()))
                                 return "bound " + lbl(r, u) + " for member " +
                                        r.part->label(j) +
                                        ": meet_x I_eta(u,I_eta(N(A),f)) is not 0";
                             if (!r.lat->leq(uc[j], u))
                                 return "upper-coresidual_" + r.part->label(j) +
                                        " is not least among the bounds";
                         }
                         if (in_V) {
                             if (!r.lat->equal(r.lat->meet_of(iv), r.lat->top()))
                                 return "bound " + lbl(r, u) + " for member " +
                                        r.part->label(j) +
                                        ": meet_x I_theta(v,I_theta(A,f)) is not 1";
                             if (!r.lat->leq(u, lr[j]))
                                 return "lower-residual_" + r.part->label(j) +
                                        " is not greatest among the bounds";
                         }
                     }
                 }
                 return std::nullopt;
             },
             gen_sets});

        // ----- reconstruction ------------------------------------------------
        add({"P4.1",
             "lower-theta reconstruction <= f <= upper-residual reconstruction pointwise",
             kTheta | kResImpl | kPartition | kUniverse, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 auto up = inv(r, InverseKind::UpperResidual, *r.i_theta, nullptr,
                               pack(r, DirectKind::UpperTheta,
                                    dcomp(r, DirectKind::UpperTheta, f)));
                 if (!f.leq(up))
                     return "upper-residual reconstruction " + render_set(r, up) +
                            " does not dominate f = " + render_set(r, f);
                 auto down = inv(r, InverseKind::LowerTheta, *r.theta, nullptr,
                                 pack(r, DirectKind::LowerResidual,
                                      dcomp(r, DirectKind::LowerResidual, f)));
                 if (!down.leq(f))
                     return "lower-theta reconstruction " + render_set(r, down) +
                            " does not stay below f = " + render_set(r, f);
                 return std::nullopt;
             },
             gen_sets});

        add({"P4.2",
             "f <= upper-eta reconstruction pointwise, and the lower-coresidual "
             "reconstruction lies below I_eta(0,f) pointwise",
             kEta | kCoresImpl | kNegator | kPartition | kUniverse, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 auto up = inv(r, InverseKind::UpperEta, *r.eta, r.neg,
                               pack(r, DirectKind::UpperCoResidual,
                                    dcomp(r, DirectKind::UpperCoResidual, f)));
                 if (!f.leq(up))
                     return "upper-eta reconstruction " + render_set(r, up) +
                            " does not dominate f = " + render_set(r, f);
                 auto down = inv(r, InverseKind::LowerCoResidual, *r.i_eta, r.neg,
                                 pack(r, DirectKind::LowerEta,
                                      dcomp(r, DirectKind::LowerEta, f)));
                 LFuzzySet cap = LFuzzySet::combine_left(*r.i_eta, r.lat->bottom(), f);
                 if (!down.leq(cap))
                     return "lower-coresidual reconstruction " + render_set(r, down) +
                            " is not below I_eta(0,f) = " + render_set(r, cap);
                 return std::nullopt;
             },
             gen_sets});

        add({"P4.3",
             "re-transforming reproduces components: upper-theta of the upper-residual "
             "reconstruction and lower-residual of the lower-theta reconstruction",
             kTheta | kResImpl | kPartition | kUniverse, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 auto d = dcomp(r, DirectKind::UpperTheta, f);
                 auto recon = inv(r, InverseKind::UpperResidual, *r.i_theta, nullptr,
                                  pack(r, DirectKind::UpperTheta, d));
                 auto d2 = dcomp(r, DirectKind::UpperTheta, recon);
                 for (std::size_t j = 0; j < d.size(); ++j)
                     if (!r.lat->equal(d[j], d2[j]))
                         return "upper-theta component " + r.part->label(j) + " moved from " +
                                lbl(r, d[j]) + " to " + lbl(r, d2[j]) + " after reconstruction";
                 auto e = dcomp(r, DirectKind::LowerResidual, f);
                 auto recon2 = inv(r, InverseKind::LowerTheta, *r.theta, nullptr,
                                   pack(r, DirectKind::LowerResidual, e));
                 auto e2 = dcomp(r, DirectKind::LowerResidual, recon2);
                 for (std::size_t j = 0; j < e.size(); ++j)
                     if (!r.lat->equal(e[j], e2[j]))
                         return "lower-residual component " + r.part->label(j) + " moved from " +
                                lbl(r, e[j]) + " to " + lbl(r, e2[j]) + " after reconstruction";
                 return std::nullopt;
             },
             gen_sets});

        add({"P4.4",
             "re-transforming reproduces components: upper-coresidual of the upper-eta "
             "reconstruction and lower-eta of the lower-coresidual reconstruction",
             kEta | kCoresImpl | kNegator | kPartition | kUniverse, nullptr,
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 auto d = dcomp(r, DirectKind::UpperCoResidual, f);
                 auto recon = inv(r, InverseKind::UpperEta, *r.eta, r.neg,
                                  pack(r, DirectKind::UpperCoResidual, d));
                 auto d2 = dcomp(r, DirectKind::UpperCoResidual, recon);
                 for (std::size_t j = 0; j < d.size(); ++j)
                     if (!r.lat->equal(d[j], d2[j]))
                         return "upper-coresidual component " + r.part->label(j) +
                                " moved from " + lbl(r, d[j]) + " to " + lbl(r, d2[j]) +
                                " after reconstruction";
                 auto e = dcomp(r, DirectKind::LowerEta, f);
                 auto recon2 = inv(r, InverseKind::LowerCoResidual, *r.i_eta, r.neg,
                                   pack(r, DirectKind::LowerEta, e));
                 auto e2 = dcomp(r, DirectKind::LowerEta, recon2);
                 for (std::size_t j = 0; j < e.size(); ++j)
                     if (!r.lat->equal(e[j], e2[j]))
                         return "lower-eta component " + r.part->label(j) + " moved from " +
                                lbl(r, e[j]) + " to " + lbl(r, e2[j]) + " after reconstruction";
                 return std::nullopt;
             },
             gen_sets});

        // ----- singleton decompositions ---------------------------------------
        add({"S5.1.i", "f = join_x theta(f(x),1_x) and f = meet_x eta(f(x),N(1_x))",
             kTheta | kEta | kNegator | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!overlap_properties(*r.theta).has_neutral)
                     unmet.push_back("overlap map has no neutral element 1");
                 if (!grouping_properties(*r.eta).has_neutral)
                     unmet.push_back("grouping map has no neutral element 0");
                 return unmet;
             },
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 const std::size_t n = r.universe->size();
                 LFuzzySet acc = LFuzzySet::combine_left(
                     *r.theta, f.at(0), characteristic_set(r.universe, r.lat, 0));
                 for (std::size_t x = 1; x < n; ++x)
                     acc = LFuzzySet::join(
                         acc, LFuzzySet::combine_left(*r.theta, f.at(x),
                                                      characteristic_set(r.universe, r.lat, x)));
                 if (!acc.equal(f))
                     return "join_x theta(f(x),1_x) = " + render_set(r, acc) + ", expected " +
                            render_set(r, f);
                 LFuzzySet acc2 = LFuzzySet::combine_left(
                     *r.eta, f.at(0), characteristic_set(r.universe, r.lat, 0).map(*r.neg));
                 for (std::size_t x = 1; x < n; ++x)
                     acc2 = LFuzzySet::meet(
                         acc2, LFuzzySet::combine_left(
                                   *r.eta, f.at(x),
                                   characteristic_set(r.universe, r.lat, x).map(*r.neg)));
                 if (!acc2.equal(f))
                     return "meet_x eta(f(x),N(1_x)) = " + render_set(r, acc2) + ", expected " +
                            render_set(r, f);
                 return std::nullopt;
             },
             gen_sets});

        add({"S5.1.ii",
             "f = join_x I_eta(N'(f(x)),1_x) with N' = I_eta(.,1), and f = meet_x "
             "I_theta(N''(f(x)),N''(1_x)) with N'' = I_theta(.,0)",
             kResImpl | kCoresImpl | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!is_involutive(r, induced_negator(*r.i_eta)))
                     unmet.push_back("the negator induced by I_eta is not involutive");
                 if (!is_involutive(r, induced_negator(*r.i_theta)))
                     unmet.push_back("the negator induced by I_theta is not involutive");
                 return unmet;
             },
             [](const R& r, const Case& c) -> std::optional<std::string> {
                 LFuzzySet f = case_set(r, c, "f");
                 const std::size_t n = r.universe->size();
                 Negator n_ie = induced_negator(*r.i_eta);
                 Negator n_it = induced_negator(*r.i_theta);
                 LFuzzySet acc = LFuzzySet::combine_left(
                     *r.i_eta, n_ie.apply(f.at(0)), characteristic_set(r.universe, r.lat, 0));
                 for (std::size_t x = 1; x < n; ++x)
                     acc = LFuzzySet::join(
                         acc, LFuzzySet::combine_left(*r.i_eta, n_ie.apply(f.at(x)),
                                                      characteristic_set(r.universe, r.lat, x)));
                 if (!acc.equal(f))
                     return "join_x I_eta(N'(f(x)),1_x) = " + render_set(r, acc) +
                            ", expected " + render_set(r, f);
                 LFuzzySet acc2 = LFuzzySet::combine_left(
                     *r.i_theta, n_it.apply(f.at(0)),
                     characteristic_set(r.universe, r.lat, 0).map(n_it));
                 for (std::size_t x = 1; x < n; ++x)
                     acc2 = LFuzzySet::meet(
                         acc2, LFuzzySet::combine_left(
                                   *r.i_theta, n_it.apply(f.at(x)),
                                   characteristic_set(r.universe, r.lat, x).map(n_it)));
                 if (!acc2.equal(f))
                     return "meet_x I_theta(N''(f(x)),N''(1_x)) = " + render_set(r, acc2) +
                            ", expected " + render_set(r, f);
                 return std::nullopt;
             },
             gen_sets});

        // ----- transformation systems ---------------------------------------
        auto check_round_trip = [](const R& r, DirectKind kind, const BinaryConnective& conn,
                                   const Negator* internal, const Negator* extraction)
            -> std::optional<std::string> {
            TransformationSystem sys = system_from_partition(*r.part, kind, conn, internal);
            SystemCheckOptions opts{r.budget, r.seed};
            ValidationReport rep = is_upper(kind)
                                       ? validate_upper_system(sys, conn, opts)
                                       : validate_lower_system(sys, conn, *extraction, opts);
            if (!rep.passed)
                return "system axioms fail: " + rep.violations.front().axiom + " " +
                       rep.violations.front().detail;
            LFuzzyPartition extracted = partition_from_system(sys, extraction);
            for (std::size_t j = 0; j < r.part->size(); ++j)
                if (!extracted.member(j).equal(r.part->member(j)))
                    return "extracted member " + r.part->label(j) + " = " +
                           render_set(r, extracted.member(j)) + " differs from " +
                           render_set(r, r.part->member(j));
            TransformationSystem rebuilt = system_from_partition(extracted, kind, conn, internal);
            for (const auto& f :
                 enumerate_fuzzy_sets(r.lat, r.part->universe_ptr(), r.budget, r.seed)) {
                LFuzzySet a = sys.apply(f);
                LFuzzySet b = rebuilt.apply(f);
                if (!a.equal(b))
                    return "rebuilt system disagrees on f = " + render_set(r, f);
            }
            return std::nullopt;
        };

        add({"P5.1",
             "the upper-theta transform over a partition is an upper transformation system, "
             "and the partition is read back from it",
             kTheta | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!overlap_properties(*r.theta).has_neutral)
                     unmet.push_back("overlap map has no neutral element 1");
                 return unmet;
             },
             [check_round_trip](const R& r, const Case&) -> std::optional<std::string> {
                 try {
                     return check_round_trip(r, DirectKind::UpperTheta, *r.theta, nullptr,
                                             nullptr);
                 } catch (const Error& e) {
                     return std::string(e.what());
                 }
             },
             gen_single});

        add({"P5.2",
             "the upper-coresidual transform, read through the negator induced by I_eta, is "
             "an upper transformation system, and the partition is read back from it",
             kCoresImpl | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!exchange_of(r, *r.i_eta))
                     unmet.push_back("co-residual implicator lacks the exchange principle");
                 if (!is_involutive(r, induced_negator(*r.i_eta)))
                     unmet.push_back("the negator induced by I_eta is not involutive");
                 return unmet;
             },
             [check_round_trip](const R& r, const Case&) -> std::optional<std::string> {
                 Negator n = induced_negator(*r.i_eta);
                 try {
                     return check_round_trip(r, DirectKind::UpperCoResidual, *r.i_eta, &n,
                                             nullptr);
                 } catch (const Error& e) {
                     return std::string(e.what());
                 }
             },
             gen_single});

        add({"P5.3",
             "the lower-eta transform is a lower transformation system under N, and the "
             "partition is read back through N",
             kEta | kNegator | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!exchange_of(r, *r.eta))
                     unmet.push_back("grouping map lacks the exchange principle");
                 if (!grouping_properties(*r.eta).has_neutral)
                     unmet.push_back("grouping map has no neutral element 0");
                 if (!is_involutive(r, *r.neg)) unmet.push_back("negator is not involutive");
                 return unmet;
             },
             [check_round_trip](const R& r, const Case&) -> std::optional<std::string> {
                 try {
                     return check_round_trip(r, DirectKind::LowerEta, *r.eta, r.neg, r.neg);
                 } catch (const Error& e) {
                     return std::string(e.what());
                 }
             },
             gen_single});

        add({"P5.4",
             "the lower-residual transform is a lower transformation system under the negator "
             "induced by I_theta, and the partition is read back through it",
             kResImpl | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!exchange_of(r, *r.i_theta))
                     unmet.push_back("residual implicator lacks the exchange principle");
                 if (!is_involutive(r, induced_negator(*r.i_theta)))
                     unmet.push_back("the negator induced by I_theta is not involutive");
                 return unmet;
             },
             [check_round_trip](const R& r, const Case&) -> std::optional<std::string> {
                 Negator n = induced_negator(*r.i_theta);
                 try {
                     return check_round_trip(r, DirectKind::LowerResidual, *r.i_theta, nullptr,
                                             &n);
                 } catch (const Error& e) {
                     return std::string(e.what());
                 }
             },
             gen_single});

        auto check_duality_pair = [](const R& r, const TransformationSystem& up,
                                     const TransformationSystem& lo,
                                     const Negator& n) -> std::optional<std::string> {
            ValidationReport rep = check_system_duality(up, lo, n, {r.budget, r.seed});
            if (!rep.passed)
                return rep.violations.front().axiom + ": " + rep.violations.front().detail;
            return std::nullopt;
        };

        add({"P5.5",
             "upper-theta and lower-eta systems over one partition are N-dual and read back "
             "the same partition",
             kTheta | kEta | kNegator | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!is_involutive(r, *r.neg)) unmet.push_back("negator is not involutive");
                 if (!dual_under(r, *r.theta, *r.eta, *r.neg))
                     unmet.push_back("overlap and grouping maps are not dual under the negator");
                 return unmet;
             },
             [check_duality_pair](const R& r, const Case&) -> std::optional<std::string> {
                 auto up = system_from_partition(*r.part, DirectKind::UpperTheta, *r.theta);
                 auto lo = system_from_partition(*r.part, DirectKind::LowerEta, *r.eta, r.neg);
                 return check_duality_pair(r, up, lo, *r.neg);
             },
             gen_single});

        add({"P5.6",
             "upper-coresidual and lower-residual systems over one partition are N-dual and "
             "read back the same member tables",
             kResImpl | kCoresImpl | kNegator | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!is_involutive(r, *r.neg)) unmet.push_back("negator is not involutive");
                 if (!dual_under(r, *r.i_theta, *r.i_eta, *r.neg))
                     unmet.push_back("the implicators are not dual under the negator");
                 return unmet;
             },
             [check_duality_pair](const R& r, const Case&) -> std::optional<std::string> {
                 auto up =
                     system_from_partition(*r.part, DirectKind::UpperCoResidual, *r.i_eta, r.neg);
                 auto lo = system_from_partition(*r.part, DirectKind::LowerResidual, *r.i_theta,
                                                 r.neg);
                 return check_duality_pair(r, up, lo, *r.neg);
             },
             gen_single});

        add({"P5.7",
             "upper-theta and lower-residual systems over one partition are dual under the "
             "negator induced by I_theta",
             kTheta | kResImpl | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!is_involutive(r, induced_negator(*r.i_theta)))
                     unmet.push_back("the negator induced by I_theta is not involutive");
                 if (!same_table(r, *r.i_theta, derive_residual(*r.theta)))
                     unmet.push_back(
                         "residual implicator is not the one derived from the overlap map");
                 if (!exchange_of(r, *r.theta))
                     unmet.push_back("overlap map lacks the exchange principle");
                 return unmet;
             },
             [check_duality_pair](const R& r, const Case&) -> std::optional<std::string> {
                 Negator n = induced_negator(*r.i_theta);
                 auto up = system_from_partition(*r.part, DirectKind::UpperTheta, *r.theta, &n);
                 auto lo =
                     system_from_partition(*r.part, DirectKind::LowerResidual, *r.i_theta, &n);
                 return check_duality_pair(r, up, lo, n);
             },
             gen_single});

        add({"P5.8",
             "upper-coresidual and lower-eta systems over one partition, both read through "
             "the negator induced by I_eta, are dual under it",
             kEta | kCoresImpl | kPartition | kUniverse,
             [](const R& r) {
                 std::vector<std::string> unmet;
                 if (!is_involutive(r, induced_negator(*r.i_eta)))
                     unmet.push_back("the negator induced by I_eta is not involutive");
                 if (!same_table(r, *r.i_eta, derive_coresidual(*r.eta)))
                     unmet.push_back(
                         "co-residual implicator is not the one derived from the grouping map");
                 if (!exchange_of(r, *r.eta))
                     unmet.push_back("grouping map lacks the exchange principle");
                 return unmet;
             },
             [check_duality_pair](const R& r, const Case&) -> std::optional<std::string> {
                 Negator n = induced_negator(*r.i_eta);
                 auto up =
                     system_from_partition(*r.part, DirectKind::UpperCoResidual, *r.i_eta, &n);
                 auto lo = system_from_partition(*r.part, DirectKind::LowerEta, *r.eta, &n);
                 return check_duality_pair(r, up, lo, n);
             },
             gen_single});

        return L;
    }();
    return laws;
}

// ------------------------------------------------------------ dispatching

const Law& find_law(const std::string& id) {
    for (const auto& law : registry())
        if (law.id == id) return law;
    throw UnknownLawError("no law registered under id '" + id + "'");
}

R resolve(const LawContext& ctx, const Law& law) {
    R r;
    r.ctx = &ctx;
    if (!ctx.lattice)
        throw MissingContextSlotError("law '" + law.id + "' needs context slot 'lattice'");
    if (!ctx.lattice->finite())
        throw FiniteCarrierRequiredError("law '" + law.id + "' enumerates the carrier; '" +
                                         ctx.lattice->name() + "' is not finite");
    r.lat = ctx.lattice;
    r.budget = ctx.budget;
    r.seed = ctx.seed;
    if (r.budget == 0)
        throw std::invalid_argument("law '" + law.id + "': enumeration budget must be positive");

    auto need = [&law](bool ok, const char* name) {
        if (!ok)
            throw MissingContextSlotError("law '" + law.id + "' needs context slot '" +
                                          std::string(name) + "'");
    };
    auto carrier = [&](const Lattice& lat, const char* what) {
        if (&lat != ctx.lattice.get())
            throw CarrierMismatchError(std::string(what) +
                                       " does not live on the context lattice");
    };

    if (ctx.theta) { r.theta = &*ctx.theta; carrier(ctx.theta->lattice(), "overlap map"); }
    if (ctx.eta) { r.eta = &*ctx.eta; carrier(ctx.eta->lattice(), "grouping map"); }
    if (ctx.res_impl) {
        r.i_theta = &*ctx.res_impl;
        carrier(ctx.res_impl->lattice(), "residual implicator");
    }
    if (ctx.cores_impl) {
        r.i_eta = &*ctx.cores_impl;
        carrier(ctx.cores_impl->lattice(), "co-residual implicator");
    }
    if (ctx.negator) { r.neg = &*ctx.negator; carrier(ctx.negator->lattice(), "negator"); }
    if (ctx.partition) {
        r.part = &*ctx.partition;
        carrier(ctx.partition->lattice(), "partition");
    }
    if (ctx.partition2) {
        r.part2 = &*ctx.partition2;
        carrier(ctx.partition2->lattice(), "second partition");
    }
    r.universe = r.part ? r.part->universe_ptr() : ctx.universe;

    if (law.slots & kTheta) need(r.theta != nullptr, "theta");
    if (law.slots & kEta) need(r.eta != nullptr, "eta");
    if (law.slots & kResImpl) need(r.i_theta != nullptr, "residual implicator");
    if (law.slots & kCoresImpl) need(r.i_eta != nullptr, "co-residual implicator");
    if (law.slots & kNegator) need(r.neg != nullptr, "negator");
    if (law.slots & kPartition) need(r.part != nullptr, "partition");
    if (law.slots & kPartition2) need(r.part2 != nullptr, "second partition");
    if (law.slots & kUniverse) need(r.universe != nullptr, "universe");
    return r;
}

LawOutcome run_body(const Law& law, const R& r, const Case* only) {
    LawOutcome out;
    auto attempt = [&](const Case& c) -> bool {
        ++out.cases;
        auto fail = law.check(r, c);
        if (fail) {
            out.witness = c;
            out.detail = *fail;
            return false;
        }
        return true;
    };
    if (only) {
        attempt(*only);
        return out;
    }
    law.generate(r, attempt);
    return out;
}

// Segment-aware id order: split on '.', letters compared as text, numbers
// (decimal or roman) numerically, so P3.2 sorts before P3.10.
std::pair<std::string, long> segment_key(const std::string& seg) {
    static const std::map<std::string, long> roman = {
        {"i", 1},  {"ii", 2},  {"iii", 3}, {"iv", 4}, {"v", 5},
        {"vi", 6}, {"vii", 7}, {"viii", 8}, {"ix", 9}, {"x", 10}};
    auto it = roman.find(seg);
    if (it != roman.end()) return {"", it->second};
    std::string alpha;
    std::size_t i = 0;
    while (i < seg.size() && !std::isdigit(static_cast<unsigned char>(seg[i])))
        alpha += seg[i++];
    long num = -1;
    if (i < seg.size()) num = std::stol(seg.substr(i));
    return {alpha, num};
}

bool id_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : s) {
            if (ch == '.') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        parts.push_back(cur);
        return parts;
    };
    const auto pa = split(a), pb = split(b);
    for (std::size_t i = 0; i < std::min(pa.size(), pb.size()); ++i) {
        const auto ka = segment_key(pa[i]), kb = segment_key(pb[i]);
        if (ka != kb) return ka < kb;
    }
    return pa.size() < pb.size();
}

} // namespace

std::vector<std::string> registered_laws() {
    std::vector<std::string> ids;
    ids.reserve(registry().size());
    for (const auto& law : registry()) ids.push_back(law.id);
    return ids;
}

LawReport run_law(const std::string& id, const LawContext& ctx) {
    const Law& law = find_law(id);
    const R r = resolve(ctx, law);
    LawReport rep;
    rep.id = law.id;
    rep.statement = law.statement;
    if (law.gate) {
        auto unmet = law.gate(r);
        if (!unmet.empty()) {
            rep.status = LawStatus::HypothesisNotMet;
            rep.unmet_hypotheses = std::move(unmet);
            return rep;
        }
    }
    LawOutcome out = run_body(law, r, nullptr);
    rep.cases_checked = out.cases;
    if (out.witness) {
        rep.status = LawStatus::Failed;
        rep.witness = *out.witness;
        rep.failure = out.detail;
    }
    return rep;
}

std::vector<LawReport> run_suite(const LawContext& ctx) {
    std::vector<LawReport> reports;
    reports.reserve(registry().size());
    for (const auto& law : registry()) reports.push_back(run_law(law.id, ctx));
    std::sort(reports.begin(), reports.end(),
              [](const LawReport& a, const LawReport& b) { return id_less(a.id, b.id); });
    return reports;
}

bool replay_failure(const std::string& id, const LawContext& ctx,
                    const nlohmann::ordered_json& witness) {
    const Law& law = find_law(id);
    const R r = resolve(ctx, law);
    LawOutcome out = run_body(law, r, &witness);
    return out.witness.has_value();
}

LawContext default_law_context() {
    LawContext ctx;
    auto lat = std::static_pointer_cast<const Lattice>(example8_lattice());
    ctx.lattice = lat;
    ctx.theta = BinaryConnective::meet_overlap(lat);
    ctx.eta = BinaryConnective::join_grouping(lat);
    ctx.res_impl = derive_residual(*ctx.theta);
    ctx.cores_impl = derive_coresidual(*ctx.eta);
    ctx.negator = example8_negator(lat);
    ctx.universe = example8_universe();
    ctx.partition = example8_partition(lat);
    ctx.partition2 = LFuzzyPartition::validate(
        {"B1"}, {LFuzzySet::constant(ctx.universe, lat, lat->top())});
    return ctx;
}

} // namespace lft
