#include "doctest.h"

#include <memory>
#include <string>
#include <vector>

#include "lft/serialize.hpp"
#include "lft/worked_example.hpp"

using namespace lft;

namespace {

// Emission must be a fixed point: emit(parse(emit(x))) == emit(x).
template <typename Parse>
void check_fixed_point(const Json& emitted, Parse parse) {
    auto reparsed = parse(emitted);
    CHECK(reparsed == emitted);
}

bool same_structure(const Lattice& a, const Lattice& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.label(a.element(i)) != b.label(b.element(i))) return false;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a.leq(a.element(i), a.element(j)) != b.leq(b.element(i), b.element(j)))
                return false;
    }
    return true;
}

} // namespace

TEST_CASE("builtin carrier names resolve, everything else does not") {
    CHECK(builtin_lattice("example8") != nullptr);
    CHECK(builtin_lattice("example8") == example8_lattice()); // shared instance
    CHECK(builtin_lattice("square") != nullptr);
    CHECK(builtin_lattice("unit") != nullptr);
    auto c4 = builtin_lattice("chain4");
    REQUIRE(c4 != nullptr);
    CHECK(c4->size() == 4);
    CHECK(builtin_lattice("chain1") != nullptr);
    CHECK(builtin_lattice("chain0") == nullptr);
    CHECK(builtin_lattice("chain") == nullptr);
    CHECK(builtin_lattice("chainx") == nullptr);
    CHECK(builtin_lattice("figure1") == nullptr);
    CHECK(builtin_lattice("") == nullptr);
    CHECK_THROWS_AS(lattice_from_json(Json("nope")), ParseError);
}

TEST_CASE("finite lattices round-trip through their file form") {
    auto lat = example8_lattice();
    Json j = lattice_to_json(*lat);
    CHECK(j["name"] == "example8");
    CHECK(j["elements"].size() == 8);
    CHECK(j["tables"]["join"].size() == 8);

    auto back = lattice_from_json(j);
    REQUIRE(back != nullptr);
    CHECK(same_structure(*lat, *back));
    check_fixed_point(j, [](const Json& doc) { return lattice_to_json(*lattice_from_json(doc)); });

    // a builtin name parses to the builtin itself
    auto named = lattice_from_json(Json("example8"));
    CHECK(named == std::static_pointer_cast<const Lattice>(example8_lattice()));
}

TEST_CASE("the unit interval round-trips with its comparison epsilon") {
    auto unit = UnitIntervalLattice::make(1e-6);
    Json j = lattice_to_json(*unit);
    CHECK(j["kind"] == "unit-interval");
    CHECK(j["epsilon"].get<double>() == 1e-6);
    auto back = std::dynamic_pointer_cast<const UnitIntervalLattice>(lattice_from_json(j));
    REQUIRE(back != nullptr);
    CHECK(back->epsilon() == 1e-6);
}

TEST_CASE("malformed lattice files name the offending field") {
    CHECK_THROWS_AS(lattice_from_json(Json{{"kind", "ring"}}), ParseError);
    CHECK_THROWS_AS(lattice_from_json(Json{{"covers", Json::array()}}), ParseError);
    Json bad_cover = {{"elements", {"0", "1"}}, {"covers", {{"0"}}}};
    CHECK_THROWS_AS(lattice_from_json(bad_cover), ParseError);
    CHECK_THROWS_AS(lattice_from_json(Json(3)), ParseError);
}

TEST_CASE("closed-form connectives round-trip by name") {
    auto lat = std::static_pointer_cast<const Lattice>(example8_lattice());
    auto meet = BinaryConnective::meet_overlap(lat);
    Json j = connective_to_json(meet);
    CHECK(j["lattice"] == Json("example8")); // builtin carriers serialize by name
    CHECK(j.contains("closed_form"));
    CHECK_FALSE(j.contains("table"));

    auto back = connective_from_json(j);
    CHECK(back.kind() == meet.kind());
    CHECK(back.form() == meet.form());
    for (const auto& a : lat->all_elements())
        for (const auto& b : lat->all_elements())
            CHECK(lat->equal(back.apply(a, b), meet.apply(a, b)));
    check_fixed_point(j, [](const Json& doc) { return connective_to_json(connective_from_json(doc)); });
}

TEST_CASE("tabulated connectives carry their full table") {
    auto lat = std::static_pointer_cast<const Lattice>(example8_lattice());
    auto impl = derive_residual(BinaryConnective::meet_overlap(lat));
    Json j = connective_to_json(impl);
    CHECK(j.contains("table"));
    CHECK(j["table"].size() == 8);
    auto back = connective_from_json(j);
    CHECK(back.kind() == impl.kind());
    CHECK(back.name() == impl.name());
    for (const auto& a : lat->all_elements())
        for (const auto& b : lat->all_elements())
            CHECK(lat->equal(back.apply(a, b), impl.apply(a, b)));
    check_fixed_point(j, [](const Json& doc) { return connective_to_json(connective_from_json(doc)); });
}

TEST_CASE("unit-interval closed forms round-trip") {
    auto unit = UnitIntervalLattice::make();
    for (const BinaryConnective& c :
         {BinaryConnective::product_overlap(unit), BinaryConnective::probabilistic_sum(unit),
          BinaryConnective::godel_residual(unit), BinaryConnective::goguen_residual(unit),
          BinaryConnective::dual_godel_coresidual(unit),
          BinaryConnective::dual_goguen_coresidual(unit)}) {
        Json j = connective_to_json(c);
        CHECK(j["lattice"] == Json("unit"));
        auto back = connective_from_json(j, unit);
        CHECK(back.kind() == c.kind());
        CHECK(back.form() == c.form());
        CHECK(unit->equal(back.apply(unit->value(0.5), unit->value(0.25)),
                          c.apply(unit->value(0.5), unit->value(0.25))));
    }
}

TEST_CASE("connective files must be internally consistent") {
    auto unit = UnitIntervalLattice::make();
    Json godel = connective_to_json(BinaryConnective::godel_residual(unit));
    Json meet = connective_to_json(
        BinaryConnective::meet_overlap(std::static_pointer_cast<const Lattice>(example8_lattice())));

    // a closed form filed under the wrong kind
    Json crossed = godel;
    crossed["kind"] = meet["kind"];
    CHECK_THROWS_AS(connective_from_json(crossed), ParseError);

    // a table on the order-continuous carrier
    Json unit_table = {{"kind", meet["kind"]}, {"lattice", "unit"}, {"table", Json::array()}};
    CHECK_THROWS_AS(connective_from_json(unit_table), ParseError);

    // neither closed form nor table
    Json empty = {{"kind", meet["kind"]}, {"lattice", "example8"}};
    CHECK_THROWS_AS(connective_from_json(empty), ParseError);

    // unknown kind
    Json bad_kind = godel;
    bad_kind["kind"] = "sideways";
    CHECK_THROWS_AS(connective_from_json(bad_kind), ParseError);

    // short table row
    Json table_doc = connective_to_json(derive_residual(BinaryConnective::meet_overlap(
        std::static_pointer_cast<const Lattice>(example8_lattice()))));
    table_doc["table"][0].erase(7);
    CHECK_THROWS_AS(connective_from_json(table_doc), ParseError);

    // unknown element label inside a table
    Json bad_elem = connective_to_json(derive_residual(BinaryConnective::meet_overlap(
        std::static_pointer_cast<const Lattice>(example8_lattice()))));
    bad_elem["table"][0][0] = "zz";
    CHECK_THROWS_AS(connective_from_json(bad_elem), ParseError);
}

TEST_CASE("a connective without a lattice field uses the caller's carrier") {
    auto lat = std::static_pointer_cast<const Lattice>(example8_lattice());
    Json j = connective_to_json(BinaryConnective::meet_overlap(lat));
    j.erase("lattice");
    auto back = connective_from_json(j, lat);
    CHECK(back.form() == ConnectiveForm::Meet);
    CHECK_THROWS_AS(connective_from_json(j), ParseError);
}

TEST_CASE("negators round-trip: tables, the standard form, reversal") {
    auto lat = std::static_pointer_cast<const Lattice>(example8_lattice());
    Negator n = example8_negator(lat);
    Json j = negator_to_json(n);
    CHECK(j["lattice"] == Json("example8"));
    CHECK(j["table"].size() == 8);
    Negator back = negator_from_json(j);
    for (const auto& e : lat->all_elements()) CHECK(lat->equal(back.apply(e), n.apply(e)));
    check_fixed_point(j, [](const Json& doc) { return negator_to_json(negator_from_json(doc)); });

    auto unit = UnitIntervalLattice::make();
    Json s = negator_to_json(Negator::standard(unit));
    CHECK(s["closed_form"] == "standard");
    Negator std_back = negator_from_json(s, unit);
    CHECK(unit->equal(std_back.apply(unit->value(0.25)), unit->value(0.75)));

    Json rev = {{"lattice", "chain3"}, {"closed_form", "reversal"}};
    auto c3 = lattice_from_json(Json("chain3"));
    Negator rev_back = negator_from_json(rev, c3);
    CHECK(c3->equal(rev_back.apply(c3->element(0)), c3->element(2)));

    // a chain reversal is tabulated, so it re-emits as a table
    auto c4 = chain_lattice(4);
    Negator reversal = Negator::chain_reversal(c4);
    CHECK(reversal.tabulated());
    Json rj = negator_to_json(reversal);
    CHECK(rj.contains("table"));
}

TEST_CASE("negator files reject carrier mismatches and unknown forms") {
    CHECK_THROWS_AS(negator_from_json(Json{{"lattice", "example8"}, {"closed_form", "standard"}}),
                    ParseError);
    CHECK_THROWS_AS(negator_from_json(Json{{"lattice", "square"}, {"closed_form", "reversal"}}),
                    ParseError);
    CHECK_THROWS_AS(negator_from_json(Json{{"lattice", "unit"}, {"closed_form", "reversal"}}),
                    ParseError);
    CHECK_THROWS_AS(negator_from_json(Json{{"lattice", "example8"}, {"closed_form", "odd"}}),
                    ParseError);
    CHECK_THROWS_AS(negator_from_json(Json{{"lattice", "example8"}}), ParseError);
    CHECK_THROWS_AS(negator_from_json(Json{{"lattice", "example8"}, {"table", {"1", "0"}}}),
                    ParseError);
    CHECK_THROWS_AS(negator_from_json(Json{{"lattice", "unit"}, {"table", Json::array()}}),
                    ParseError);
}

TEST_CASE("function-backed negators have no file form") {
    auto unit = UnitIntervalLattice::make();
    Negator odd = Negator::from_function(unit, "one-minus-squared",
                                         [](double u) { return 1.0 - u * u; });
    CHECK_THROWS_AS(negator_to_json(odd), UnsupportedFormatError);
}

TEST_CASE("partitions round-trip and reject non-partitions on the way in") {
    auto lat = std::static_pointer_cast<const Lattice>(example8_lattice());
    auto part = example8_partition(lat);
    Json j = partition_to_json(part);
    CHECK(j["universe"] == Json({"x1", "x2", "x3"}));
    CHECK(j["members"].size() == 3);
    auto back = partition_from_json(j, lat);
    CHECK(back.size() == part.size());
    for (std::size_t m = 0; m < part.size(); ++m) {
        CHECK(back.label(m) == part.label(m));
        for (std::size_t x = 0; x < part.universe().size(); ++x)
            CHECK(lat->equal(back.member(m).at(x), part.member(m).at(x)));
    }
    check_fixed_point(j, [&](const Json& doc) {
        return partition_to_json(partition_from_json(doc, lat));
    });

    Json base = {{"universe", {"x1", "x2", "x3"}}};
    Json not_normal = base;
    not_normal["members"] = {{"A1", {"p", "q", "u"}}};
    CHECK_THROWS_AS(partition_from_json(not_normal, lat), NotNormalError);

    Json overlapping = base;
    overlapping["members"] = {{"A1", {"1", "1", "p"}}, {"A2", {"p", "1", "1"}}};
    CHECK_THROWS_AS(partition_from_json(overlapping, lat), CoresOverlapError);

    Json gap = base;
    gap["members"] = {{"A1", {"1", "p", "q"}}, {"A2", {"p", "1", "q"}}};
    CHECK_THROWS_AS(partition_from_json(gap, lat), CoresDontCoverError);

    Json short_member = base;
    short_member["members"] = {{"A1", {"1", "p"}}};
    CHECK_THROWS_AS(partition_from_json(short_member, lat), ParseError);

    Json bad_label = base;
    bad_label["members"] = {{"A1", {"1", "p", "zz"}}};
    CHECK_THROWS_AS(partition_from_json(bad_label, lat), ParseError);

    CHECK_THROWS_AS(partition_from_json(base, lat), ParseError);       // no members
    Json empty_members = base;
    empty_members["members"] = Json::object();
    CHECK_THROWS_AS(partition_from_json(empty_members, lat), ParseError);
    CHECK_THROWS_AS(partition_from_json(j, nullptr), ParseError);      // no carrier
}

TEST_CASE("transform results round-trip with kind and component labels") {
    auto lat = std::static_pointer_cast<const Lattice>(example8_lattice());
    auto part = example8_partition(lat);
    LFuzzySet f(example8_universe(), lat, {*lat->parse("p"), *lat->parse("q"), *lat->parse("u")});
    DirectResult d = direct_transform(DirectKind::UpperTheta, part,
                                      BinaryConnective::meet_overlap(lat), nullptr, f);
    Json j = direct_result_to_json(d);
    CHECK(j["components"].size() == 3);
    DirectResult back = direct_result_from_json(j, lat);
    CHECK(back.kind == d.kind);
    CHECK(back.member_labels == d.member_labels);
    for (std::size_t m = 0; m < d.components.size(); ++m)
        CHECK(lat->equal(back.components[m], d.components[m]));
    check_fixed_point(j, [&](const Json& doc) {
        return direct_result_to_json(direct_result_from_json(doc, lat));
    });

    Json bad_kind = j;
    bad_kind["kind"] = "diagonal";
    CHECK_THROWS_AS(direct_result_from_json(bad_kind, lat), ParseError);
    Json bad_value = j;
    bad_value["components"]["A1"] = "zz";
    CHECK_THROWS_AS(direct_result_from_json(bad_value, lat), ParseError);
    Json not_object = j;
    not_object["components"] = Json::array();
    CHECK_THROWS_AS(direct_result_from_json(not_object, lat), ParseError);
}

TEST_CASE("validation reports serialize their verdict, facts and violations") {
    auto lat = std::static_pointer_cast<const Lattice>(example8_lattice());
    auto good = validate_overlap(BinaryConnective::meet_overlap(lat));
    Json j = validation_report_to_json(good);
    CHECK(j["passed"] == true);
    CHECK(j["exhaustive"] == true);
    CHECK(j["violations"].empty());
    CHECK(j["cases_checked"].get<std::size_t>() == good.cases_checked);

    // corrupt one cell of the meet table so commutativity breaks
    auto c3 = chain_lattice(3);
    auto lat3 = std::static_pointer_cast<const Lattice>(c3);
    std::vector<std::vector<Elem>> table(3, std::vector<Elem>(3));
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            table[a][b] = lat3->meet(lat3->element(a), lat3->element(b));
    table[2][1] = lat3->element(0);
    auto broken =
        BinaryConnective::from_table(ConnectiveKind::Overlap, lat3, table, "broken-meet");
    auto bad = validate_overlap(broken);
    REQUIRE_FALSE(bad.passed);
    Json bj = validation_report_to_json(bad);
    CHECK(bj["passed"] == false);
    REQUIRE_FALSE(bj["violations"].empty());
    CHECK(bj["violations"][0].contains("axiom"));
    CHECK(bj["violations"][0].contains("witness"));
    CHECK(bj["violations"][0].contains("detail"));
}

TEST_CASE("law reports only carry the fields their status warrants") {
    auto ctx = default_law_context();
    Json passed = law_report_to_json(run_law("L2.1", ctx));
    CHECK(passed["status"] == "passed");
    CHECK_FALSE(passed.contains("witness"));
    CHECK_FALSE(passed.contains("failure"));
    CHECK_FALSE(passed.contains("unmet_hypotheses"));

    Json unmet = law_report_to_json(run_law("P3.5", ctx));
    CHECK(unmet["status"] == "hypothesis-not-met");
    CHECK(unmet.contains("unmet_hypotheses"));
    CHECK_FALSE(unmet["unmet_hypotheses"].empty());
    CHECK_FALSE(unmet.contains("witness"));

    auto broken = ctx;
    broken.res_impl = BinaryConnective::threshold_residual(ctx.lattice);
    broken.cores_impl = BinaryConnective::threshold_coresidual(ctx.lattice);
    Json failed = law_report_to_json(run_law("L2.1", broken));
    CHECK(failed["status"] == "failed");
    CHECK(failed.contains("witness"));
    CHECK(failed.contains("failure"));
    CHECK_FALSE(failed.contains("unmet_hypotheses"));
}

TEST_CASE("systems round-trip through their defining bundle") {
    auto lat = std::static_pointer_cast<const Lattice>(example8_lattice());
    auto part = example8_partition(lat);
    auto theta = BinaryConnective::meet_overlap(lat);
    auto sys = system_from_partition(part, DirectKind::UpperTheta, theta);
    Json j = system_to_json(sys, part, theta);
    CHECK(j["universe"] == Json({"x1", "x2", "x3"}));
    CHECK(j["index_set"] == Json({"A1", "A2", "A3"}));
    CHECK_FALSE(j["operator"].contains("negator"));

    auto back = system_from_json(j);
    CHECK(back.kind() == sys.kind());
    CHECK(back.onto_map() == sys.onto_map());
    LFuzzySet f(example8_universe(), lat,
                {*lat->parse("p"), *lat->parse("q"), *lat->parse("u")});
    LFuzzySet a = sys.apply(f), b = back.apply(f);
    for (std::size_t m = 0; m < a.size(); ++m) CHECK(lat->equal(a.at(m), b.at(m)));

    // lower-transform bundle keeps its negator
    auto eta = BinaryConnective::join_grouping(lat);
    Negator neg = example8_negator(lat);
    auto low = system_from_partition(part, DirectKind::LowerEta, eta, &neg);
    Json lj = system_to_json(low, part, eta, &neg);
    CHECK(lj["operator"].contains("negator"));
    auto low_back = system_from_json(lj);
    LFuzzySet la = low.apply(f), lb = low_back.apply(f);
    for (std::size_t m = 0; m < la.size(); ++m) CHECK(lat->equal(la.at(m), lb.at(m)));
}

TEST_CASE("system files are cross-checked against their recorded shape") {
    auto lat = std::static_pointer_cast<const Lattice>(example8_lattice());
    auto part = example8_partition(lat);
    auto theta = BinaryConnective::meet_overlap(lat);
    auto sys = system_from_partition(part, DirectKind::UpperTheta, theta);
    const Json good = system_to_json(sys, part, theta);

    Json kind_clash = good;
    kind_clash["kind"] = direct_result_to_json(direct_transform(
        DirectKind::LowerResidual, part, derive_residual(theta), nullptr,
        LFuzzySet::constant(example8_universe(), lat, lat->top())))["kind"];
    CHECK_THROWS_AS(system_from_json(kind_clash), ParseError);

    Json wrong_universe = good;
    wrong_universe["universe"] = {"x1", "x2", "zz"};
    CHECK_THROWS_AS(system_from_json(wrong_universe), ParseError);

    Json wrong_index = good;
    wrong_index["index_set"] = {"A1", "A2"};
    CHECK_THROWS_AS(system_from_json(wrong_index), ParseError);

    Json wrong_onto = good;
    wrong_onto["onto_map"]["x1"] = "A2";
    CHECK_THROWS_AS(system_from_json(wrong_onto), ParseError);

    Json no_operator = good;
    no_operator.erase("operator");
    CHECK_THROWS_AS(system_from_json(no_operator), ParseError);
}
