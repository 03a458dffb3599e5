#include "doctest.h"

#include <stdexcept>

#include "lft/errors.hpp"
#include "lft/lattice.hpp"
#include "lft/worked_example.hpp"

using namespace lft;

namespace {

Elem el(const Lattice& lat, const std::string& label) {
    auto e = lat.parse(label);
    REQUIRE(e.has_value());
    return *e;
}

} // namespace

TEST_CASE("eight-element lattice: structure and operations") {
    auto lat = example8_lattice();
    CHECK(lat->size() == 8);
    CHECK(lat->finite());
    CHECK(lat->name() == "example8");
    CHECK(lat->label(lat->bottom()) == "0");
    CHECK(lat->label(lat->top()) == "1");
    CHECK_FALSE(lat->is_chain());

    auto q = el(*lat, "q"), r = el(*lat, "r"), s = el(*lat, "s"), t = el(*lat, "t"),
         p = el(*lat, "p"), u = el(*lat, "u");

    CHECK(lat->label(lat->join(q, r)) == "s");
    CHECK(lat->label(lat->meet(q, r)) == "p");
    CHECK(lat->label(lat->join(s, t)) == "u");
    CHECK(lat->label(lat->meet(s, t)) == "r");
    CHECK(lat->label(lat->join(q, t)) == "u");
    CHECK(lat->label(lat->meet(q, t)) == "p");

    CHECK(lat->leq(p, q));
    CHECK(lat->leq(r, u));
    CHECK_FALSE(lat->leq(q, r));
    CHECK_FALSE(lat->leq(r, q));
    CHECK(lat->equal(u, u));
    CHECK_FALSE(lat->equal(q, r));

    // idempotence, commutativity, absorption on a few pairs
    CHECK(lat->equal(lat->join(q, q), q));
    CHECK(lat->equal(lat->join(q, r), lat->join(r, q)));
    CHECK(lat->equal(lat->meet(q, lat->join(q, t)), q));
}

TEST_CASE("element enumeration follows the label order") {
    auto lat = example8_lattice();
    for (std::size_t i = 0; i < lat->size(); ++i)
        CHECK(lat->label(lat->element(i)) == lat->labels().at(i));
}

TEST_CASE("parse and label round trip; unknown labels return nothing") {
    auto lat = example8_lattice();
    for (const auto& name : lat->labels()) {
        auto e = lat->parse(name);
        REQUIRE(e.has_value());
        CHECK(lat->label(*e) == name);
    }
    CHECK_FALSE(lat->parse("z").has_value());
    CHECK_FALSE(lat->parse("").has_value());
}

TEST_CASE("chains order by index") {
    auto c4 = chain_lattice(4);
    CHECK(c4->size() == 4);
    CHECK(c4->is_chain());
    CHECK(c4->name() == "chain4");
    CHECK(c4->label(c4->bottom()) == "0");
    CHECK(c4->label(c4->top()) == "3");
    auto one = el(*c4, "1"), two = el(*c4, "2");
    CHECK(c4->label(c4->join(one, two)) == "2");
    CHECK(c4->label(c4->meet(one, two)) == "1");
    CHECK(c4->leq(one, two));
    CHECK_FALSE(c4->leq(two, one));

    auto c1 = chain_lattice(1);
    CHECK(c1->size() == 1);
    CHECK(c1->equal(c1->bottom(), c1->top()));

    CHECK_THROWS_AS(chain_lattice(0), std::invalid_argument);
}

TEST_CASE("product of two two-chains") {
    auto sq = square_lattice();
    CHECK(sq->size() == 4);
    CHECK_FALSE(sq->is_chain());
    auto a = el(*sq, "01"), b = el(*sq, "10");
    CHECK_FALSE(sq->leq(a, b));
    CHECK_FALSE(sq->leq(b, a));
    CHECK(sq->label(sq->join(a, b)) == "11");
    CHECK(sq->label(sq->meet(a, b)) == "00");
}

TEST_CASE("from_covers accepts any order-generating edges") {
    // Same chain given once by covers and once with a redundant long edge.
    auto direct = TableLattice::from_covers("c", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    auto redundant =
        TableLattice::from_covers("c", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(direct->leq(direct->element(i), direct->element(j)) ==
                  redundant->leq(redundant->element(i), redundant->element(j)));
}

TEST_CASE("posets that are not lattices are rejected") {
    // Two maximal elements: no top, so no join for them.
    CHECK_THROWS_AS(TableLattice::from_covers("vee", {"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}),
                    NotALatticeError);
    // Two incomparable pairs with two minimal upper bounds: join not unique.
    CHECK_THROWS_AS(TableLattice::from_covers("hexagon", {"0", "a", "b", "c", "d", "1"},
                                              {{"0", "a"},
                                               {"0", "b"},
                                               {"a", "c"},
                                               {"b", "c"},
                                               {"a", "d"},
                                               {"b", "d"},
                                               {"c", "1"},
                                               {"d", "1"}}),
                    NotALatticeError);
    CHECK_THROWS_AS(TableLattice::from_covers("loop", {"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                    CyclicOrderError);
    CHECK_THROWS_AS(TableLattice::from_covers("dangling", {"a"}, {{"a", "z"}}),
                    std::invalid_argument);
}

TEST_CASE("order dual swaps join and meet") {
    auto lat = example8_lattice();
    auto dual = lat->dual("example8-dual");
    CHECK(dual->size() == lat->size());
    CHECK(dual->label(dual->bottom()) == "1");
    CHECK(dual->label(dual->top()) == "0");
    auto q = el(*dual, "q"), r = el(*dual, "r");
    CHECK(dual->label(dual->join(q, r)) == "p");
    CHECK(dual->label(dual->meet(q, r)) == "s");
}

TEST_CASE("unit interval carrier") {
    auto unit = UnitIntervalLattice::make();
    CHECK_FALSE(unit->finite());
    CHECK(unit->name() == "unit");
    CHECK(unit->epsilon() == doctest::Approx(1e-9));
    CHECK(unit->label(unit->bottom()) == "0");
    CHECK(unit->label(unit->top()) == "1");

    auto a = unit->value(0.3), b = unit->value(0.7);
    CHECK(unit->leq(a, b));
    CHECK(unit->label(unit->join(a, b)) == "0.7");
    CHECK(unit->label(unit->meet(a, b)) == "0.3");
    CHECK(unit->equal(unit->value(0.1 + 0.2), unit->value(0.3)));
    CHECK_FALSE(unit->equal(unit->value(0.3), unit->value(0.300001)));

    auto grid = unit->grid(101);
    CHECK(grid.size() == 101);
    CHECK(grid.front().raw == 0.0);
    CHECK(grid.back().raw == 1.0);

    auto parsed = unit->parse("0.25");
    REQUIRE(parsed.has_value());
    CHECK(parsed->raw == 0.25);
    CHECK_FALSE(unit->parse("1.5").has_value());
    CHECK_FALSE(unit->parse("x").has_value());

    CHECK_THROWS_AS(unit->size(), std::logic_error);
    CHECK_THROWS_AS(unit->element(0), std::logic_error);
}

TEST_CASE("family folds honour the empty-family policy") {
    auto lat = example8_lattice();
    std::vector<Elem> none;
    CHECK_THROWS_AS(lat->join_of(none, EmptyFold::Strict), EmptyFamilyError);
    CHECK(lat->equal(lat->join_of(none, EmptyFold::Identity), lat->bottom()));
    CHECK(lat->equal(lat->meet_of(none, EmptyFold::Identity), lat->top()));

    std::vector<Elem> some = {el(*lat, "q"), el(*lat, "r"), el(*lat, "t")};
    CHECK(lat->label(lat->join_of(some)) == "u");
    CHECK(lat->label(lat->meet_of(some)) == "p");
}

TEST_CASE("reals render in shortest round-trip form") {
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(1.0) == "1");
    CHECK(format_real(0.0) == "0");
    CHECK(format_real(0.1) == "0.1");
    CHECK(format_real(1.0 / 3.0) == "0.3333333333333333");
}
