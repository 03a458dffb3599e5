#include "lft/serialize.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "lft/worked_example.hpp"

namespace lft {
namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

const Json& field(const Json& j, const char* key, const char* what) {
    if (!j.is_object())
        throw ParseError(std::string(what) + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
    return *it;
}

std::string string_field(const Json& j, const char* key, const char* what) {
    const Json& v = field(j, key, what);
    if (!v.is_string())
        throw ParseError(std::string(what) + ": field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

std::vector<std::string> string_array(const Json& v, const char* what) {
    if (!v.is_array())
        throw ParseError(std::string(what) + ": expected an array of strings");
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& item : v) {
        if (!item.is_string())
            throw ParseError(std::string(what) + ": expected an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

Elem parse_elem(const Lattice& lat, const std::string& label, const char* what) {
    auto e = lat.parse(label);
    if (!e)
        throw ParseError(std::string(what) + ": '" + label + "' is not an element of '" +
                         lat.name() + "'");
    return *e;
}

bool same_structure(const Lattice& a, const Lattice& b) {
    if (&a == &b) return true;
    if (!a.finite() || !b.finite()) {
        const auto* ua = dynamic_cast<const UnitIntervalLattice*>(&a);
        const auto* ub = dynamic_cast<const UnitIntervalLattice*>(&b);
        return ua && ub && ua->epsilon() == ub->epsilon();
    }
    const auto* ta = dynamic_cast<const TableLattice*>(&a);
    const auto* tb = dynamic_cast<const TableLattice*>(&b);
    return ta && tb && ta->labels() == tb->labels() && ta->cover_pairs() == tb->cover_pairs();
}

// Builtin name when the carrier is (structurally) a builtin, else inline.
Json lattice_ref_json(const Lattice& lat) {
    auto builtin = builtin_lattice(lat.name());
    if (builtin && same_structure(lat, *builtin)) return Json(lat.name());
    return lattice_to_json(lat);
}

// Carriers are compared by pointer identity everywhere else, so a document's
// lattice reference rehydrates into the supplied instance whenever the two
// agree structurally; a genuinely different carrier is built from the
// document.
std::shared_ptr<const Lattice> resolve_carrier(const Json& j,
                                               std::shared_ptr<const Lattice> fallback,
                                               const char* what) {
    if (!j.contains("lattice")) {
        if (!fallback)
            throw ParseError(std::string(what) +
                             ": no \"lattice\" field and no carrier supplied");
        return fallback;
    }
    auto parsed = lattice_from_json(j.at("lattice"));
    if (fallback && same_structure(*parsed, *fallback)) return fallback;
    return parsed;
}

std::shared_ptr<const UnitIntervalLattice> require_unit(
    const std::shared_ptr<const Lattice>& lat, const char* what) {
    auto unit = std::dynamic_pointer_cast<const UnitIntervalLattice>(lat);
    if (!unit)
        throw ParseError(std::string(what) + ": closed form needs the unit-interval carrier, "
                                             "got '" +
                         lat->name() + "'");
    return unit;
}

} // namespace

std::shared_ptr<const Lattice> builtin_lattice(const std::string& name) {
    if (name == "example8") return example8_lattice();
    if (name == "square") return square_lattice();
    if (name == "unit") return UnitIntervalLattice::make();
    constexpr const char* prefix = "chain";
    if (name.rfind(prefix, 0) == 0) {
        const std::string digits = name.substr(5);
        if (all_digits(digits) && digits.size() <= 6) {
            const std::size_t n = std::stoul(digits);
            if (n >= 1) return chain_lattice(n);
        }
    }
    return nullptr;
}

Json lattice_to_json(const Lattice& lat) {
    if (!lat.finite()) {
        const auto* unit = dynamic_cast<const UnitIntervalLattice*>(&lat);
        Json j;
        j["name"] = lat.name();
        j["kind"] = "unit-interval";
        if (unit) j["epsilon"] = unit->epsilon();
        return j;
    }
    const auto* table = dynamic_cast<const TableLattice*>(&lat);
    Json j;
    j["name"] = lat.name();
    Json elements = Json::array();
    for (const auto& e : lat.all_elements()) elements.push_back(lat.label(e));
    j["elements"] = std::move(elements);
    Json covers = Json::array();
    if (table) {
        for (const auto& [a, b] : table->cover_pairs())
            covers.push_back(Json::array({table->labels()[a], table->labels()[b]}));
    }
    j["covers"] = std::move(covers);
    Json join_rows = Json::array(), meet_rows = Json::array();
    for (const auto& a : lat.all_elements()) {
        Json jr = Json::array(), mr = Json::array();
        for (const auto& b : lat.all_elements()) {
            jr.push_back(lat.label(lat.join(a, b)));
            mr.push_back(lat.label(lat.meet(a, b)));
        }
        join_rows.push_back(std::move(jr));
        meet_rows.push_back(std::move(mr));
    }
    j["tables"] = Json{{"join", std::move(join_rows)}, {"meet", std::move(meet_rows)}};
    return j;
}

std::shared_ptr<const Lattice> lattice_from_json(const Json& j) {
    if (j.is_string()) {
        auto lat = builtin_lattice(j.get<std::string>());
        if (!lat)
            throw ParseError("lattice: '" + j.get<std::string>() +
                             "' is not a builtin carrier name");
        return lat;
    }
    if (!j.is_object()) throw ParseError("lattice: expected a builtin name or an object");
    if (j.contains("kind")) {
        const std::string kind = string_field(j, "kind", "lattice");
        if (kind != "unit-interval")
            throw ParseError("lattice: unknown kind '" + kind + "'");
        const double eps = j.value("epsilon", 1e-9);
        return UnitIntervalLattice::make(eps);
    }
    const auto labels = string_array(field(j, "elements", "lattice"), "lattice elements");
    const Json& covers = field(j, "covers", "lattice");
    if (!covers.is_array()) throw ParseError("lattice: \"covers\" must be an array of pairs");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& pair : covers) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw ParseError("lattice: each cover must be a pair of element labels");
        edges.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return TableLattice::from_covers(j.value("name", std::string("lattice")), labels, edges);
}

Json connective_to_json(const BinaryConnective& c) {
    Json j;
    j["kind"] = to_string(c.kind());
    j["name"] = c.name();
    j["lattice"] = lattice_ref_json(c.lattice());
    if (c.form() != ConnectiveForm::Table) {
        j["closed_form"] = to_string(c.form());
        return j;
    }
    const Lattice& lat = c.lattice();
    Json rows = Json::array();
    for (const auto& a : lat.all_elements()) {
        Json row = Json::array();
        for (const auto& b : lat.all_elements()) row.push_back(lat.label(c.apply(a, b)));
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    return j;
}

BinaryConnective connective_from_json(const Json& j, std::shared_ptr<const Lattice> fallback) {
    const std::string kind_text = string_field(j, "kind", "connective");
    auto kind = connective_kind_from_string(kind_text);
    if (!kind) throw ParseError("connective: unknown kind '" + kind_text + "'");

    std::shared_ptr<const Lattice> lat = resolve_carrier(j, std::move(fallback), "connective");

    if (j.contains("closed_form")) {
        const std::string cf = string_field(j, "closed_form", "connective");
        auto form = connective_form_from_string(cf);
        if (!form || *form == ConnectiveForm::Table)
            throw ParseError("connective: unknown closed form '" + cf + "'");
        switch (*form) {
            case ConnectiveForm::Meet:
                if (*kind != ConnectiveKind::Overlap) break;
                return BinaryConnective::meet_overlap(lat);
            case ConnectiveForm::Join:
                if (*kind != ConnectiveKind::Grouping) break;
                return BinaryConnective::join_grouping(lat);
            case ConnectiveForm::Product:
                if (*kind != ConnectiveKind::Overlap) break;
                return BinaryConnective::product_overlap(require_unit(lat, "connective"));
            case ConnectiveForm::ProbabilisticSum:
                if (*kind != ConnectiveKind::Grouping) break;
                return BinaryConnective::probabilistic_sum(require_unit(lat, "connective"));
            case ConnectiveForm::Godel:
                if (*kind != ConnectiveKind::ResidualImplicator) break;
                return BinaryConnective::godel_residual(require_unit(lat, "connective"));
            case ConnectiveForm::Goguen:
                if (*kind != ConnectiveKind::ResidualImplicator) break;
                return BinaryConnective::goguen_residual(require_unit(lat, "connective"));
            case ConnectiveForm::DualGodel:
                if (*kind != ConnectiveKind::CoResidualImplicator) break;
                return BinaryConnective::dual_godel_coresidual(require_unit(lat, "connective"));
            case ConnectiveForm::DualGoguen:
                if (*kind != ConnectiveKind::CoResidualImplicator) break;
                return BinaryConnective::dual_goguen_coresidual(require_unit(lat, "connective"));
            case ConnectiveForm::ThresholdResidual:
                if (*kind != ConnectiveKind::ResidualImplicator) break;
                return BinaryConnective::threshold_residual(lat);
            case ConnectiveForm::ThresholdCoResidual:
                if (*kind != ConnectiveKind::CoResidualImplicator) break;
                return BinaryConnective::threshold_coresidual(lat);
            case ConnectiveForm::Table:
                break;
        }
        throw ParseError("connective: closed form '" + cf + "' does not produce kind '" +
                         kind_text + "'");
    }

    if (j.contains("table")) {
        if (!lat->finite())
            throw ParseError("connective: explicit tables need a finite carrier");
        const Json& rows = j.at("table");
        if (!rows.is_array() || rows.size() != lat->size())
            throw ParseError("connective: table must have one row per element");
        std::vector<std::vector<Elem>> table;
        table.reserve(rows.size());
        for (const auto& row : rows) {
            const auto labels = string_array(row, "connective table row");
            if (labels.size() != lat->size())
                throw ParseError("connective: table must have one column per element");
            std::vector<Elem> entries;
            entries.reserve(labels.size());
            for (const auto& label : labels)
                entries.push_back(parse_elem(*lat, label, "connective table"));
            table.push_back(std::move(entries));
        }
        return BinaryConnective::from_table(*kind, lat, std::move(table),
                                            j.value("name", kind_text + "-table"));
    }

    throw ParseError("connective: needs either \"closed_form\" or \"table\"");
}

Json negator_to_json(const Negator& n) {
    Json j;
    j["name"] = n.name();
    j["lattice"] = lattice_ref_json(n.lattice());
    if (n.tabulated()) {
        Json images = Json::array();
        for (const auto& e : n.table()) images.push_back(n.lattice().label(e));
        j["table"] = std::move(images);
        return j;
    }
    if (n.name() == "standard") {
        j["closed_form"] = "standard";
        return j;
    }
    throw UnsupportedFormatError("negator '" + n.name() +
                                 "' is function-backed and has no file form");
}

Negator negator_from_json(const Json& j, std::shared_ptr<const Lattice> fallback) {
    std::shared_ptr<const Lattice> lat = resolve_carrier(j, std::move(fallback), "negator");

    if (j.contains("closed_form")) {
        const std::string cf = string_field(j, "closed_form", "negator");
        if (cf == "standard") {
            auto unit = std::dynamic_pointer_cast<const UnitIntervalLattice>(lat);
            if (!unit)
                throw ParseError("negator: the standard negator needs the unit-interval "
                                 "carrier");
            return Negator::standard(unit);
        }
        if (cf == "reversal" || cf == "chain-reversal") {
            auto table = std::dynamic_pointer_cast<const TableLattice>(lat);
            if (!table || !table->is_chain())
                throw ParseError("negator: reversal needs a finite chain carrier");
            return Negator::chain_reversal(table);
        }
        throw ParseError("negator: unknown closed form '" + cf + "'");
    }

    if (j.contains("table")) {
        if (!lat->finite()) throw ParseError("negator: explicit tables need a finite carrier");
        const auto labels = string_array(j.at("table"), "negator table");
        if (labels.size() != lat->size())
            throw ParseError("negator: table must list one image per element");
        std::vector<Elem> images;
        images.reserve(labels.size());
        for (const auto& label : labels) images.push_back(parse_elem(*lat, label, "negator"));
        return Negator::from_table(lat, std::move(images), j.value("name", std::string("negator")));
    }

    throw ParseError("negator: needs either \"closed_form\" or \"table\"");
}

Json partition_to_json(const LFuzzyPartition& p) {
    Json j;
    Json universe = Json::array();
    for (const auto& point : p.universe().points()) universe.push_back(point);
    j["universe"] = std::move(universe);
    Json members = Json::object();
    for (std::size_t m = 0; m < p.size(); ++m) {
        Json values = Json::array();
        const LFuzzySet& member = p.member(m);
        for (std::size_t x = 0; x < member.size(); ++x)
            values.push_back(p.lattice().label(member.at(x)));
        members[p.label(m)] = std::move(values);
    }
    j["members"] = std::move(members);
    return j;
}

LFuzzyPartition partition_from_json(const Json& j, std::shared_ptr<const Lattice> lat) {
    if (!lat) throw ParseError("partition: no carrier supplied");
    const auto points = string_array(field(j, "universe", "partition"), "partition universe");
    auto universe = Universe::make("universe", points);
    const Json& members = field(j, "members", "partition");
    if (!members.is_object() || members.empty())
        throw ParseError("partition: \"members\" must be a nonempty object");
    std::vector<std::string> labels;
    std::vector<LFuzzySet> sets;
    for (auto it = members.begin(); it != members.end(); ++it) {
        const auto value_labels = string_array(it.value(), "partition member");
        if (value_labels.size() != points.size())
            throw ParseError("partition: member '" + it.key() +
                             "' must list one value per universe point");
        std::vector<Elem> values;
        values.reserve(value_labels.size());
        for (const auto& label : value_labels)
            values.push_back(parse_elem(*lat, label, "partition member"));
        labels.push_back(it.key());
        sets.emplace_back(universe, lat, std::move(values));
    }
    return LFuzzyPartition::validate(std::move(labels), std::move(sets));
}

Json direct_result_to_json(const DirectResult& d) {
    Json j;
    j["kind"] = to_string(d.kind);
    Json components = Json::object();
    for (std::size_t m = 0; m < d.member_labels.size(); ++m)
        components[d.member_labels[m]] = d.lattice->label(d.components[m]);
    j["components"] = std::move(components);
    return j;
}

DirectResult direct_result_from_json(const Json& j, std::shared_ptr<const Lattice> lat) {
    if (!lat) throw ParseError("transform result: no carrier supplied");
    const std::string kind_text = string_field(j, "kind", "transform result");
    auto kind = direct_kind_from_string(kind_text);
    if (!kind) throw ParseError("transform result: unknown kind '" + kind_text + "'");
    const Json& components = field(j, "components", "transform result");
    if (!components.is_object() || components.empty())
        throw ParseError("transform result: \"components\" must be a nonempty object");
    DirectResult d;
    d.kind = *kind;
    d.lattice = lat;
    for (auto it = components.begin(); it != components.end(); ++it) {
        if (!it.value().is_string())
            throw ParseError("transform result: component values must be element labels");
        d.member_labels.push_back(it.key());
        d.components.push_back(
            parse_elem(*lat, it.value().get<std::string>(), "transform result"));
    }
    return d;
}

Json validation_report_to_json(const ValidationReport& rep) {
    Json j;
    j["subject"] = rep.subject;
    j["passed"] = rep.passed;
    j["exhaustive"] = rep.exhaustive;
    j["cases_checked"] = rep.cases_checked;
    Json violations = Json::array();
    for (const auto& v : rep.violations) {
        Json witness = Json::array();
        for (const auto& w : v.witness) witness.push_back(w);
        violations.push_back(
            Json{{"axiom", v.axiom}, {"witness", std::move(witness)}, {"detail", v.detail}});
    }
    j["violations"] = std::move(violations);
    Json facts = Json::object();
    for (const auto& [name, value] : rep.facts) facts[name] = value;
    j["facts"] = std::move(facts);
    Json notes = Json::array();
    for (const auto& note : rep.notes) notes.push_back(note);
    j["notes"] = std::move(notes);
    return j;
}

Json law_report_to_json(const LawReport& rep) {
    Json j;
    j["id"] = rep.id;
    j["statement"] = rep.statement;
    j["status"] = to_string(rep.status);
    j["cases_checked"] = rep.cases_checked;
    if (rep.status == LawStatus::Failed) {
        j["witness"] = rep.witness;
        j["failure"] = rep.failure;
    }
    if (rep.status == LawStatus::HypothesisNotMet) {
        Json unmet = Json::array();
        for (const auto& h : rep.unmet_hypotheses) unmet.push_back(h);
        j["unmet_hypotheses"] = std::move(unmet);
    }
    return j;
}

Json system_to_json(const TransformationSystem& sys, const LFuzzyPartition& p,
                    const BinaryConnective& conn, const Negator* neg) {
    Json j;
    j["name"] = sys.name();
    Json universe = Json::array();
    for (const auto& point : sys.universe().points()) universe.push_back(point);
    j["universe"] = std::move(universe);
    Json index_set = Json::array();
    for (const auto& point : sys.index_set().points()) index_set.push_back(point);
    j["index_set"] = std::move(index_set);
    Json onto = Json::object();
    for (std::size_t x = 0; x < sys.universe().size(); ++x)
        onto[sys.universe().point(x)] = sys.index_set().point(sys.onto_map().at(x));
    j["onto_map"] = std::move(onto);
    j["kind"] = to_string(sys.kind());
    Json op;
    op["partition"] = partition_to_json(p);
    op["kind"] = to_string(sys.kind());
    op["connective"] = connective_to_json(conn);
    if (neg) op["negator"] = negator_to_json(*neg);
    j["operator"] = std::move(op);
    return j;
}

TransformationSystem system_from_json(const Json& j) {
    const Json& op = field(j, "operator", "system");
    const std::string kind_text = string_field(op, "kind", "system operator");
    auto kind = direct_kind_from_string(kind_text);
    if (!kind) throw ParseError("system operator: unknown kind '" + kind_text + "'");
    if (string_field(j, "kind", "system") != kind_text)
        throw ParseError("system: top-level kind disagrees with the operator kind");

    BinaryConnective conn = connective_from_json(field(op, "connective", "system operator"));
    auto lat = conn.lattice_ptr();
    LFuzzyPartition part = partition_from_json(field(op, "partition", "system operator"), lat);
    std::optional<Negator> neg;
    if (op.contains("negator")) neg = negator_from_json(op.at("negator"), lat);

    TransformationSystem sys =
        system_from_partition(part, *kind, conn, neg ? &*neg : nullptr);

    const auto points = string_array(field(j, "universe", "system"), "system universe");
    if (points != sys.universe().points())
        throw ParseError("system: recorded universe disagrees with the operator's partition");
    const auto index_points = string_array(field(j, "index_set", "system"), "system index set");
    if (index_points != sys.index_set().points())
        throw ParseError("system: recorded index set disagrees with the partition's members");
    const Json& onto = field(j, "onto_map", "system");
    if (!onto.is_object()) throw ParseError("system: \"onto_map\" must be an object");
    for (std::size_t x = 0; x < sys.universe().size(); ++x) {
        const std::string& point = sys.universe().point(x);
        auto it = onto.find(point);
        if (it == onto.end() || !it->is_string() ||
            it->get<std::string>() != sys.index_set().point(sys.onto_map().at(x)))
            throw ParseError("system: recorded onto map disagrees with the partition cores at "
                             "point '" +
                             point + "'");
    }
    return sys;
}

} // namespace lft
