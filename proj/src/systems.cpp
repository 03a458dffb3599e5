#include "lft/systems.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

namespace lft {
namespace {

std::string render_set(const LFuzzySet& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += f.lattice().label(f.at(i));
    }
    out += ")";
    return out;
}

std::vector<double> value_key(const LFuzzySet& f) {
    std::vector<double> key;
    key.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) key.push_back(f.at(i).raw);
    return key;
}

// Shared deterministic case plan, so validators and validation_inputs agree
// on exactly which sets and pairs an operator will be asked about.
struct CasePlan {
    std::vector<LFuzzySet> family;
    bool family_exhaustive = false;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    bool pairs_exhaustive = false;
};

constexpr std::size_t kPairCap = 262144;   // all unordered pairs up to this many
constexpr std::size_t kPairSamples = 8192; // sampled pairs beyond the cap

CasePlan build_plan(const std::shared_ptr<const Lattice>& lat,
                    const std::shared_ptr<const Universe>& u,
                    const SystemCheckOptions& opts) {
    CasePlan plan;
    plan.family = enumerate_fuzzy_sets(lat, u, opts.budget, opts.seed, &plan.family_exhaustive);
    if (plan.family.empty())
        throw std::invalid_argument("enumeration budget must be positive");
    const std::size_t n = plan.family.size();
    if (n <= kPairCap / (n ? n : 1)) {
        plan.pairs_exhaustive = true;
        plan.pairs.reserve(n * (n + 1) / 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) plan.pairs.emplace_back(i, j);
    } else {
        plan.pairs_exhaustive = false;
        std::mt19937_64 rng(opts.seed + 1);
        plan.pairs.reserve(kPairSamples);
        for (std::size_t c = 0; c < kPairSamples; ++c)
            plan.pairs.emplace_back(static_cast<std::size_t>(rng() % n),
                                    static_cast<std::size_t>(rng() % n));
    }
    return plan;
}

void require_finite(const Lattice& lat, const char* what) {
    if (!lat.finite())
        throw FiniteCarrierRequiredError(std::string(what) +
                                         " enumerates carrier elements; '" + lat.name() +
                                         "' is not finite");
}

void require_role(const TransformationSystem& sys, const BinaryConnective& conn) {
    const ConnectiveKind want = required_connective(sys.kind());
    if (conn.kind() != want)
        throw KindMismatchError("system '" + sys.name() + "' of kind " + to_string(sys.kind()) +
                                " pairs with a " + to_string(want) + " connective, got " +
                                to_string(conn.kind()) + " '" + conn.name() + "'");
    if (&conn.lattice() != &sys.lattice())
        throw CarrierMismatchError("connective '" + conn.name() + "' lives on '" +
                                   conn.lattice().name() + "' but system '" + sys.name() +
                                   "' lives on '" + sys.lattice().name() + "'");
}

LFuzzySet fold_family(const std::vector<LFuzzySet>& family, bool join) {
    LFuzzySet acc = family.front();
    for (std::size_t i = 1; i < family.size(); ++i)
        acc = join ? LFuzzySet::join(acc, family[i]) : LFuzzySet::meet(acc, family[i]);
    return acc;
}

// Member value tables read off a system: A_y(x) = U[1_x](y) for upper
// systems, N(H[N(1_x)])(y) for lower ones.
std::vector<LFuzzySet> extraction_members(const TransformationSystem& sys, const Negator* neg) {
    const Negator* n = neg ? neg : sys.negator();
    if (!sys.upper() && !n)
        throw MissingNegatorError("extracting a partition from lower system '" + sys.name() +
                                  "' needs a negator");
    const auto lat = sys.lattice_ptr();
    const auto X = sys.universe_ptr();
    const auto Y = sys.index_set_ptr();
    std::vector<std::vector<Elem>> columns(Y->size());
    for (auto& col : columns) col.reserve(X->size());
    for (std::size_t x = 0; x < X->size(); ++x) {
        LFuzzySet ind = characteristic_set(X, lat, x);
        LFuzzySet img = sys.upper() ? sys.apply(ind) : sys.apply(ind.map(*n)).map(*n);
        for (std::size_t y = 0; y < Y->size(); ++y) columns[y].push_back(img.at(y));
    }
    std::vector<LFuzzySet> members;
    members.reserve(Y->size());
    for (auto& col : columns) members.emplace_back(X, lat, std::move(col));
    return members;
}

} // namespace

TransformationSystem TransformationSystem::make(std::string name,
                                                std::shared_ptr<const Lattice> lattice,
                                                std::shared_ptr<const Universe> universe,
                                                std::shared_ptr<const Universe> index_set,
                                                std::vector<std::size_t> onto_map,
                                                DirectKind kind,
                                                Operator op,
                                                std::optional<Negator> negator) {
    if (!lattice || !universe || !index_set)
        throw std::invalid_argument("system '" + name + "': null lattice or universe");
    if (!op) throw std::invalid_argument("system '" + name + "': null operator");
    if (onto_map.size() != universe->size())
        throw std::invalid_argument("system '" + name + "': onto map has " +
                                    std::to_string(onto_map.size()) + " entries for " +
                                    std::to_string(universe->size()) + " points");
    std::vector<char> hit(index_set->size(), 0);
    for (std::size_t x = 0; x < onto_map.size(); ++x) {
        if (onto_map[x] >= index_set->size())
            throw std::invalid_argument("system '" + name + "': onto map sends '" +
                                        universe->point(x) + "' to index #" +
                                        std::to_string(onto_map[x]) + " outside the index set");
        hit[onto_map[x]] = 1;
    }
    for (std::size_t y = 0; y < hit.size(); ++y)
        if (!hit[y])
            throw std::invalid_argument("system '" + name + "': onto map misses index '" +
                                        index_set->point(y) + "'");
    if (negator && &negator->lattice() != lattice.get())
        throw CarrierMismatchError("system '" + name + "': negator lives on '" +
                                   negator->lattice().name() + "', system on '" +
                                   lattice->name() + "'");
    TransformationSystem sys;
    sys.name_ = std::move(name);
    sys.lattice_ = std::move(lattice);
    sys.universe_ = std::move(universe);
    sys.index_set_ = std::move(index_set);
    sys.onto_map_ = std::move(onto_map);
    sys.kind_ = kind;
    sys.op_ = std::move(op);
    sys.negator_ = std::move(negator);
    return sys;
}

LFuzzySet TransformationSystem::apply(const LFuzzySet& f) const {
    if (&f.lattice() != lattice_.get())
        throw CarrierMismatchError("system '" + name_ + "' on '" + lattice_->name() +
                                   "' applied to a set on '" + f.lattice().name() + "'");
    if (!f.universe().same_as(*universe_))
        throw CarrierMismatchError("system '" + name_ + "' expects sets on universe '" +
                                   universe_->name() + "', got '" + f.universe().name() + "'");
    LFuzzySet out = op_(f);
    if (&out.lattice() != lattice_.get() || !out.universe().same_as(*index_set_))
        throw CarrierMismatchError("operator of system '" + name_ +
                                   "' returned a set on the wrong universe or carrier");
    return out;
}

ValidationReport validate_upper_system(const TransformationSystem& sys,
                                       const BinaryConnective& conn,
                                       const SystemCheckOptions& opts) {
    if (!sys.upper())
        throw KindMismatchError("validate_upper_system needs an upper system; '" + sys.name() +
                                "' is tagged " + to_string(sys.kind()));
    require_role(sys, conn);
    require_finite(sys.lattice(), "upper-system validation");

    const auto lat = sys.lattice_ptr();
    const auto X = sys.universe_ptr();
    const auto Y = sys.index_set_ptr();

    ValidationReport rep;
    rep.subject = "upper system '" + sys.name() + "'";

    // (iii) indicators, exhaustive over X x Y.
    for (std::size_t x = 0; x < X->size(); ++x) {
        LFuzzySet img = sys.apply(characteristic_set(X, lat, x));
        for (std::size_t y = 0; y < Y->size(); ++y) {
            ++rep.cases_checked;
            const bool is_top = lat->equal(img.at(y), lat->top());
            const bool should = sys.onto_map()[x] == y;
            if (is_top != should)
                rep.add({"(iii)",
                         {X->point(x), Y->point(y)},
                         "U[indicator of " + X->point(x) + "](" + Y->point(y) + ") = " +
                             lat->label(img.at(y)) + (should ? ", expected top" : ", expected below top")});
        }
    }

    CasePlan plan = build_plan(lat, X, opts);
    std::vector<LFuzzySet> image;
    image.reserve(plan.family.size());
    for (const auto& f : plan.family) image.push_back(sys.apply(f));

    // (i) pairwise joins.
    for (const auto& [i, j] : plan.pairs) {
        ++rep.cases_checked;
        LFuzzySet lhs = sys.apply(LFuzzySet::join(plan.family[i], plan.family[j]));
        LFuzzySet rhs = LFuzzySet::join(image[i], image[j]);
        if (!lhs.equal(rhs))
            rep.add({"(i)",
                     {render_set(plan.family[i]), render_set(plan.family[j])},
                     "U[f v g] = " + render_set(lhs) + " but U[f] v U[g] = " + render_set(rhs)});
    }
    // (i) the whole family at once.
    {
        ++rep.cases_checked;
        LFuzzySet lhs = sys.apply(fold_family(plan.family, /*join=*/true));
        LFuzzySet rhs = fold_family(image, /*join=*/true);
        if (!lhs.equal(rhs))
            rep.add({"(i)", {"whole family"},
                     "U[join of all " + std::to_string(plan.family.size()) + " sets] = " +
                         render_set(lhs) + " but join of images = " + render_set(rhs)});
    }
    // (i) the empty family: U[constant bottom] = constant bottom.
    {
        ++rep.cases_checked;
        LFuzzySet lhs = sys.apply(LFuzzySet::constant(X, lat, lat->bottom()));
        LFuzzySet rhs = LFuzzySet::constant(Y, lat, lat->bottom());
        if (!lhs.equal(rhs))
            rep.add({"(i)", {"empty family"},
                     "U[constant bottom] = " + render_set(lhs) + ", expected constant bottom"});
    }

    // (ii) constants through the connective.
    const std::vector<Elem> constants = lat->all_elements();
    for (Elem u : constants) {
        for (std::size_t k = 0; k < plan.family.size(); ++k) {
            ++rep.cases_checked;
            LFuzzySet lhs = sys.apply(LFuzzySet::combine_left(conn, u, plan.family[k]));
            LFuzzySet rhs = LFuzzySet::combine_left(conn, u, image[k]);
            if (!lhs.equal(rhs))
                rep.add({"(ii)",
                         {lat->label(u), render_set(plan.family[k])},
                         "U[F(" + lat->label(u) + ", f)] = " + render_set(lhs) +
                             " but F(" + lat->label(u) + ", U[f]) = " + render_set(rhs)});
        }
    }

    rep.exhaustive = plan.family_exhaustive && plan.pairs_exhaustive;
    rep.notes.push_back("family: " + std::to_string(plan.family.size()) + " sets (" +
                        (plan.family_exhaustive ? "exhaustive" : "seeded sample") + "); pairs: " +
                        std::to_string(plan.pairs.size()) +
                        (plan.pairs_exhaustive ? " (all unordered)" : " (seeded sample)") +
                        "; constants: " + std::to_string(constants.size()));
    rep.finish();
    return rep;
}

ValidationReport validate_lower_system(const TransformationSystem& sys,
                                       const BinaryConnective& conn,
                                       const Negator& neg,
                                       const SystemCheckOptions& opts) {
    if (sys.upper())
        throw KindMismatchError("validate_lower_system needs a lower system; '" + sys.name() +
                                "' is tagged " + to_string(sys.kind()));
    require_role(sys, conn);
    if (&neg.lattice() != &sys.lattice())
        throw CarrierMismatchError("negator '" + neg.name() + "' lives on '" +
                                   neg.lattice().name() + "', system on '" +
                                   sys.lattice().name() + "'");
    require_finite(sys.lattice(), "lower-system validation");

    const auto lat = sys.lattice_ptr();
    const auto X = sys.universe_ptr();
    const auto Y = sys.index_set_ptr();

    ValidationReport rep;
    rep.subject = "lower system '" + sys.name() + "'";

    // (iii) negated indicators, read back through the negator.
    for (std::size_t x = 0; x < X->size(); ++x) {
        LFuzzySet img = sys.apply(characteristic_set(X, lat, x).map(neg)).map(neg);
        for (std::size_t y = 0; y < Y->size(); ++y) {
            ++rep.cases_checked;
            const bool is_top = lat->equal(img.at(y), lat->top());
            const bool should = sys.onto_map()[x] == y;
            if (is_top != should)
                rep.add({"(iii)",
                         {X->point(x), Y->point(y)},
                         "N(H[N(indicator of " + X->point(x) + ")])(" + Y->point(y) + ") = " +
                             lat->label(img.at(y)) + (should ? ", expected top" : ", expected below top")});
        }
    }

    CasePlan plan = build_plan(lat, X, opts);
    std::vector<LFuzzySet> image;
    image.reserve(plan.family.size());
    for (const auto& f : plan.family) image.push_back(sys.apply(f));

    // (i) pairwise meets.
    for (const auto& [i, j] : plan.pairs) {
        ++rep.cases_checked;
        LFuzzySet lhs = sys.apply(LFuzzySet::meet(plan.family[i], plan.family[j]));
        LFuzzySet rhs = LFuzzySet::meet(image[i], image[j]);
        if (!lhs.equal(rhs))
            rep.add({"(i)",
                     {render_set(plan.family[i]), render_set(plan.family[j])},
                     "H[f ^ g] = " + render_set(lhs) + " but H[f] ^ H[g] = " + render_set(rhs)});
    }
    // (i) the whole family at once.
    {
        ++rep.cases_checked;
        LFuzzySet lhs = sys.apply(fold_family(plan.family, /*join=*/false));
        LFuzzySet rhs = fold_family(image, /*join=*/false);
        if (!lhs.equal(rhs))
            rep.add({"(i)", {"whole family"},
                     "H[meet of all " + std::to_string(plan.family.size()) + " sets] = " +
                         render_set(lhs) + " but meet of images = " + render_set(rhs)});
    }
    // (i) the empty family: H[constant top] = constant top.
    {
        ++rep.cases_checked;
        LFuzzySet lhs = sys.apply(LFuzzySet::constant(X, lat, lat->top()));
        LFuzzySet rhs = LFuzzySet::constant(Y, lat, lat->top());
        if (!lhs.equal(rhs))
            rep.add({"(i)", {"empty family"},
                     "H[constant top] = " + render_set(lhs) + ", expected constant top"});
    }

    // (ii) constants through the connective.
    const std::vector<Elem> constants = lat->all_elements();
    for (Elem u : constants) {
        for (std::size_t k = 0; k < plan.family.size(); ++k) {
            ++rep.cases_checked;
            LFuzzySet lhs = sys.apply(LFuzzySet::combine_left(conn, u, plan.family[k]));
            LFuzzySet rhs = LFuzzySet::combine_left(conn, u, image[k]);
            if (!lhs.equal(rhs))
                rep.add({"(ii)",
                         {lat->label(u), render_set(plan.family[k])},
                         "H[F(" + lat->label(u) + ", f)] = " + render_set(lhs) +
                             " but F(" + lat->label(u) + ", H[f]) = " + render_set(rhs)});
        }
    }

    rep.exhaustive = plan.family_exhaustive && plan.pairs_exhaustive;
    rep.notes.push_back("family: " + std::to_string(plan.family.size()) + " sets (" +
                        (plan.family_exhaustive ? "exhaustive" : "seeded sample") + "); pairs: " +
                        std::to_string(plan.pairs.size()) +
                        (plan.pairs_exhaustive ? " (all unordered)" : " (seeded sample)") +
                        "; constants: " + std::to_string(constants.size()));
    rep.finish();
    return rep;
}

TransformationSystem system_from_partition(const LFuzzyPartition& p,
                                           DirectKind kind,
                                           const BinaryConnective& conn,
                                           const Negator* neg) {
    const ConnectiveKind want = required_connective(kind);
    if (conn.kind() != want)
        throw KindMismatchError(to_string(kind) + " needs a " + to_string(want) +
                                " connective, got " + to_string(conn.kind()) + " '" +
                                conn.name() + "'");
    if (&conn.lattice() != &p.lattice())
        throw CarrierMismatchError("connective '" + conn.name() + "' lives on '" +
                                   conn.lattice().name() + "', partition on '" +
                                   p.lattice().name() + "'");
    std::optional<Negator> negator;
    if (needs_negator(kind)) {
        if (!neg)
            throw MissingNegatorError(to_string(kind) + " needs a negator");
        if (&neg->lattice() != &p.lattice())
            throw CarrierMismatchError("negator '" + neg->name() + "' lives on '" +
                                       neg->lattice().name() + "', partition on '" +
                                       p.lattice().name() + "'");
        negator = *neg;
    } else if (neg) {
        if (&neg->lattice() != &p.lattice())
            throw CarrierMismatchError("negator '" + neg->name() + "' lives on '" +
                                       neg->lattice().name() + "', partition on '" +
                                       p.lattice().name() + "'");
        negator = *neg; // kept as the system's default for extraction
    }

    auto Y = Universe::make(p.universe().name() + ":" + to_string(kind) + ":index", p.labels());
    std::vector<std::size_t> onto(p.universe().size());
    for (std::size_t x = 0; x < onto.size(); ++x) onto[x] = p.member_of_point(x);

    const LFuzzyPartition partition = p;
    const BinaryConnective connective = conn;
    const std::optional<Negator> op_neg = negator;
    const auto lat = p.lattice_ptr();
    TransformationSystem::Operator op = [partition, connective, op_neg, kind, Y,
                                         lat](const LFuzzySet& f) {
        DirectResult r = direct_transform(kind, partition, connective,
                                          op_neg ? &*op_neg : nullptr, f);
        return LFuzzySet(Y, lat, std::move(r.components));
    };
    return TransformationSystem::make(p.universe().name() + "-" + to_string(kind),
                                      p.lattice_ptr(), p.universe_ptr(), Y, std::move(onto),
                                      kind, std::move(op), std::move(negator));
}

LFuzzyPartition partition_from_system(const TransformationSystem& sys, const Negator* neg) {
    std::vector<LFuzzySet> members = extraction_members(sys, neg);
    LFuzzyPartition extracted = [&] {
        try {
            return LFuzzyPartition::validate(sys.index_set().points(), std::move(members));
        } catch (const NotNormalError& e) {
            throw ExtractionNotPartitionError("system '" + sys.name() + "': " + e.what());
        } catch (const CoresOverlapError& e) {
            throw ExtractionNotPartitionError("system '" + sys.name() + "': " + e.what());
        } catch (const CoresDontCoverError& e) {
            throw ExtractionNotPartitionError("system '" + sys.name() + "': " + e.what());
        }
    }();
    for (std::size_t x = 0; x < sys.universe().size(); ++x) {
        if (extracted.member_of_point(x) != sys.onto_map()[x])
            throw ExtractionNotPartitionError(
                "system '" + sys.name() + "': extracted index map sends '" +
                sys.universe().point(x) + "' to '" + extracted.label(extracted.member_of_point(x)) +
                "' but the onto map says '" + sys.index_set().point(sys.onto_map()[x]) + "'");
    }
    return extracted;
}

ValidationReport check_system_duality(const TransformationSystem& upper,
                                      const TransformationSystem& lower,
                                      const Negator& neg,
                                      const SystemCheckOptions& opts) {
    if (!upper.upper())
        throw KindMismatchError("duality check: first system must be upper; '" + upper.name() +
                                "' is tagged " + to_string(upper.kind()));
    if (lower.upper())
        throw KindMismatchError("duality check: second system must be lower; '" + lower.name() +
                                "' is tagged " + to_string(lower.kind()));
    if (&upper.lattice() != &lower.lattice() || &neg.lattice() != &upper.lattice())
        throw CarrierMismatchError("duality check needs both systems and the negator on one carrier");
    if (!upper.universe().same_as(lower.universe()) ||
        !upper.index_set().same_as(lower.index_set()))
        throw CarrierMismatchError("duality check needs matching universes and index sets");
    require_finite(upper.lattice(), "duality check");

    const auto lat = upper.lattice_ptr();
    ValidationReport rep;
    rep.subject = "duality '" + upper.name() + "' vs '" + lower.name() + "'";

    for (Elem e : lat->all_elements()) {
        ++rep.cases_checked;
        if (!lat->equal(neg.apply(neg.apply(e)), e))
            rep.add({"involution",
                     {lat->label(e)},
                     "N(N(" + lat->label(e) + ")) = " + lat->label(neg.apply(neg.apply(e)))});
    }

    if (upper.onto_map() != lower.onto_map()) {
        ++rep.cases_checked;
        rep.add({"onto-map", {}, "the two systems disagree on the index of some point"});
    }

    CasePlan plan = build_plan(lat, upper.universe_ptr(), opts);
    for (const auto& f : plan.family) {
        ++rep.cases_checked;
        LFuzzySet u_lhs = upper.apply(f);
        LFuzzySet u_rhs = lower.apply(f.map(neg)).map(neg);
        if (!u_lhs.equal(u_rhs))
            rep.add({"U=N.H.N", {render_set(f)},
                     "U[f] = " + render_set(u_lhs) + " but N(H[N(f)]) = " + render_set(u_rhs)});
        ++rep.cases_checked;
        LFuzzySet l_lhs = lower.apply(f);
        LFuzzySet l_rhs = upper.apply(f.map(neg)).map(neg);
        if (!l_lhs.equal(l_rhs))
            rep.add({"H=N.U.N", {render_set(f)},
                     "H[f] = " + render_set(l_lhs) + " but N(U[N(f)]) = " + render_set(l_rhs)});
    }

    // Shared origin: the two systems must read back the same member tables.
    std::vector<LFuzzySet> from_upper = extraction_members(upper, &neg);
    std::vector<LFuzzySet> from_lower = extraction_members(lower, &neg);
    for (std::size_t y = 0; y < from_upper.size(); ++y) {
        ++rep.cases_checked;
        if (!from_upper[y].equal(from_lower[y]))
            rep.add({"partitions",
                     {upper.index_set().point(y)},
                     "member '" + upper.index_set().point(y) + "' reads " +
                         render_set(from_upper[y]) + " from the upper system but " +
                         render_set(from_lower[y]) + " from the lower one"});
    }
    // When the tables form genuine partitions, both extractions must succeed
    // together; one-sided failure is reported.
    bool upper_ok = true, lower_ok = true;
    std::string upper_err, lower_err;
    try {
        (void)partition_from_system(upper, &neg);
    } catch (const Error& e) {
        upper_ok = false;
        upper_err = e.what();
    }
    try {
        (void)partition_from_system(lower, &neg);
    } catch (const Error& e) {
        lower_ok = false;
        lower_err = e.what();
    }
    ++rep.cases_checked;
    if (upper_ok != lower_ok)
        rep.add({"partitions", {},
                 upper_ok ? ("only the lower extraction fails: " + lower_err)
                          : ("only the upper extraction fails: " + upper_err)});
    else if (!upper_ok)
        rep.notes.push_back("extracted member tables agree but are not partitions (" +
                            upper_err + ")");

    rep.exhaustive = plan.family_exhaustive;
    rep.notes.push_back("family: " + std::to_string(plan.family.size()) + " sets (" +
                        (plan.family_exhaustive ? "exhaustive" : "seeded sample") + ")");
    rep.finish();
    return rep;
}

ValidationReport singleton_decomposition_check(std::shared_ptr<const Lattice> lat,
                                               const BinaryConnective* theta,
                                               const BinaryConnective* eta,
                                               const Negator* neg,
                                               const BinaryConnective* i_theta,
                                               const BinaryConnective* i_eta,
                                               std::shared_ptr<const Universe> universe,
                                               const SystemCheckOptions& opts) {
    require_finite(*lat, "singleton decomposition check");
    ValidationReport rep;
    rep.subject = "singleton decomposition on '" + universe->name() + "'";

    bool fam_exhaustive = false;
    std::vector<LFuzzySet> family =
        enumerate_fuzzy_sets(lat, universe, opts.budget, opts.seed, &fam_exhaustive);
    const std::size_t n = universe->size();

    std::vector<LFuzzySet> indicators;
    indicators.reserve(n);
    for (std::size_t x = 0; x < n; ++x) indicators.push_back(characteristic_set(universe, lat, x));

    // identity (i-a): f = join_x theta(f(x), 1_x)
    if (!theta) {
        rep.notes.push_back("identity (i-a): no overlap map supplied - skipped");
    } else if (!overlap_properties(*theta).has_neutral) {
        rep.notes.push_back("identity (i-a): overlap map '" + theta->name() +
                            "' has no neutral top - skipped");
    } else {
        for (const auto& f : family) {
            ++rep.cases_checked;
            LFuzzySet acc = LFuzzySet::combine_left(*theta, f.at(0), indicators[0]);
            for (std::size_t x = 1; x < n; ++x)
                acc = LFuzzySet::join(acc, LFuzzySet::combine_left(*theta, f.at(x), indicators[x]));
            if (!acc.equal(f))
                rep.add({"(i-a)", {render_set(f)},
                         "join_x theta(f(x), 1_x) = " + render_set(acc) + ", expected " +
                             render_set(f)});
        }
    }

    // identity (i-b): f = meet_x eta(f(x), N(1_x))
    if (!eta || !neg) {
        rep.notes.push_back("identity (i-b): grouping map or negator missing - skipped");
    } else if (!grouping_properties(*eta).has_neutral) {
        rep.notes.push_back("identity (i-b): grouping map '" + eta->name() +
                            "' has no neutral bottom - skipped");
    } else {
        for (const auto& f : family) {
            ++rep.cases_checked;
            LFuzzySet acc = LFuzzySet::combine_left(*eta, f.at(0), indicators[0].map(*neg));
            for (std::size_t x = 1; x < n; ++x)
                acc = LFuzzySet::meet(
                    acc, LFuzzySet::combine_left(*eta, f.at(x), indicators[x].map(*neg)));
            if (!acc.equal(f))
                rep.add({"(i-b)", {render_set(f)},
                         "meet_x eta(f(x), N(1_x)) = " + render_set(acc) + ", expected " +
                             render_set(f)});
        }
    }

    // identity (ii-a): f = join_x I_eta(N_Ieta(f(x)), 1_x)
    if (!i_eta) {
        rep.notes.push_back("identity (ii-a): no co-residual implicator supplied - skipped");
    } else {
        Negator induced = induced_negator(*i_eta);
        bool involutive = true;
        for (Elem e : lat->all_elements())
            if (!lat->equal(induced.apply(induced.apply(e)), e)) involutive = false;
        if (!involutive) {
            rep.notes.push_back("identity (ii-a): induced negator of '" + i_eta->name() +
                                "' is not involutive - skipped");
        } else {
            for (const auto& f : family) {
                ++rep.cases_checked;
                LFuzzySet acc =
                    LFuzzySet::combine_left(*i_eta, induced.apply(f.at(0)), indicators[0]);
                for (std::size_t x = 1; x < n; ++x)
                    acc = LFuzzySet::join(acc, LFuzzySet::combine_left(
                                                   *i_eta, induced.apply(f.at(x)), indicators[x]));
                if (!acc.equal(f))
                    rep.add({"(ii-a)", {render_set(f)},
                             "join_x I_eta(N'(f(x)), 1_x) = " + render_set(acc) + ", expected " +
                                 render_set(f)});
            }
        }
    }

    // identity (ii-b): f = meet_x I_theta(N_Itheta(f(x)), N_Itheta(1_x))
    if (!i_theta) {
        rep.notes.push_back("identity (ii-b): no residual implicator supplied - skipped");
    } else {
        Negator induced = induced_negator(*i_theta);
        bool involutive = true;
        for (Elem e : lat->all_elements())
            if (!lat->equal(induced.apply(induced.apply(e)), e)) involutive = false;
        if (!involutive) {
            rep.notes.push_back("identity (ii-b): induced negator of '" + i_theta->name() +
                                "' is not involutive - skipped");
        } else {
            for (const auto& f : family) {
                ++rep.cases_checked;
                LFuzzySet acc = LFuzzySet::combine_left(*i_theta, induced.apply(f.at(0)),
                                                        indicators[0].map(induced));
                for (std::size_t x = 1; x < n; ++x)
                    acc = LFuzzySet::meet(
                        acc, LFuzzySet::combine_left(*i_theta, induced.apply(f.at(x)),
                                                     indicators[x].map(induced)));
                if (!acc.equal(f))
                    rep.add({"(ii-b)", {render_set(f)},
                             "meet_x I_theta(N'(f(x)), N'(1_x)) = " + render_set(acc) +
                                 ", expected " + render_set(f)});
            }
        }
    }

    rep.exhaustive = fam_exhaustive;
    rep.notes.push_back("family: " + std::to_string(family.size()) + " sets (" +
                        (fam_exhaustive ? "exhaustive" : "seeded sample") + ")");
    rep.finish();
    return rep;
}

std::vector<LFuzzySet> validation_inputs(DirectKind kind,
                                         std::shared_ptr<const Lattice> lat,
                                         std::shared_ptr<const Universe> universe,
                                         const BinaryConnective& conn,
                                         const Negator* neg,
                                         const SystemCheckOptions& opts) {
    const ConnectiveKind want = required_connective(kind);
    if (conn.kind() != want)
        throw KindMismatchError(to_string(kind) + " validation uses a " + to_string(want) +
                                " connective, got " + to_string(conn.kind()) + " '" +
                                conn.name() + "'");
    if (&conn.lattice() != lat.get())
        throw CarrierMismatchError("connective '" + conn.name() + "' is not on carrier '" +
                                   lat->name() + "'");
    if (neg && &neg->lattice() != lat.get())
        throw CarrierMismatchError("negator '" + neg->name() + "' is not on carrier '" +
                                   lat->name() + "'");
    require_finite(*lat, "validation input listing");

    const bool upper = is_upper(kind);
    CasePlan plan = build_plan(lat, universe, opts);

    std::vector<LFuzzySet> inputs;
    std::map<std::vector<double>, bool> seen;
    auto push = [&](LFuzzySet f) {
        auto key = value_key(f);
        if (seen.emplace(std::move(key), true).second) inputs.push_back(std::move(f));
    };

    for (const auto& f : plan.family) push(f);
    for (const auto& [i, j] : plan.pairs)
        push(upper ? LFuzzySet::join(plan.family[i], plan.family[j])
                   : LFuzzySet::meet(plan.family[i], plan.family[j]));
    push(fold_family(plan.family, upper));
    push(LFuzzySet::constant(universe, lat, upper ? lat->bottom() : lat->top()));
    for (std::size_t x = 0; x < universe->size(); ++x) {
        LFuzzySet ind = characteristic_set(universe, lat, x);
        push(ind);
        if (neg) push(ind.map(*neg));
    }
    if (neg)
        for (const auto& f : plan.family) push(f.map(*neg));
    for (Elem u : lat->all_elements())
        for (const auto& f : plan.family) push(LFuzzySet::combine_left(conn, u, f));
    return inputs;
}

TransformationSystem system_from_batch(std::string name,
                                       std::shared_ptr<const Lattice> lattice,
                                       std::shared_ptr<const Universe> universe,
                                       std::shared_ptr<const Universe> index_set,
                                       std::vector<std::size_t> onto_map,
                                       DirectKind kind,
                                       std::vector<LFuzzySet> inputs,
                                       std::vector<LFuzzySet> outputs,
                                       std::optional<Negator> negator) {
    if (inputs.size() != outputs.size())
        throw std::invalid_argument("batch system '" + name + "': " +
                                    std::to_string(inputs.size()) + " inputs for " +
                                    std::to_string(outputs.size()) + " outputs");
    auto table = std::make_shared<std::map<std::vector<double>, std::size_t>>();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (&inputs[i].lattice() != lattice.get() || !inputs[i].universe().same_as(*universe))
            throw CarrierMismatchError("batch system '" + name + "': input #" +
                                       std::to_string(i) + " is not on (universe, carrier)");
        if (&outputs[i].lattice() != lattice.get() || !outputs[i].universe().same_as(*index_set))
            throw CarrierMismatchError("batch system '" + name + "': output #" +
                                       std::to_string(i) + " is not on (index set, carrier)");
        (*table)[value_key(inputs[i])] = i;
    }
    auto stored = std::make_shared<std::vector<LFuzzySet>>(std::move(outputs));
    std::string held_name = name;
    TransformationSystem::Operator op = [table, stored, held_name](const LFuzzySet& f) {
        auto it = table->find(value_key(f));
        if (it == table->end())
            throw MissingBatchOutputError("batch system '" + held_name +
                                          "' has no output recorded for input " + render_set(f));
        return (*stored)[it->second];
    };
    return TransformationSystem::make(std::move(name), std::move(lattice), std::move(universe),
                                      std::move(index_set), std::move(onto_map), kind,
                                      std::move(op), std::move(negator));
}

} // namespace lft
