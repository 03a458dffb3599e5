#include "doctest.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lft/connectives.hpp"
#include "lft/errors.hpp"
#include "lft/fuzzy.hpp"
#include "lft/lattice.hpp"
#include "lft/lawcheck.hpp"
#include "lft/partition.hpp"
#include "lft/worked_example.hpp"

using namespace lft;

namespace {

LawContext chain_context(std::size_t n) {
    auto chain = chain_lattice(n);
    auto lat = std::static_pointer_cast<const Lattice>(chain);
    LawContext ctx;
    ctx.lattice = lat;
    ctx.theta = BinaryConnective::meet_overlap(lat);
    ctx.eta = BinaryConnective::join_grouping(lat);
    ctx.res_impl = derive_residual(*ctx.theta);
    ctx.cores_impl = derive_coresidual(*ctx.eta);
    ctx.negator = Negator::chain_reversal(chain);
    auto u = Universe::make("X", {"x1", "x2"});
    ctx.partition = block_partition(u, lat, 2);
    ctx.universe = u;
    ctx.partition2 =
        LFuzzyPartition::validate({"B1"}, {LFuzzySet::constant(u, lat, lat->top())});
    return ctx;
}

} // namespace

TEST_CASE("the registry lists every law, sorted numerically by segment") {
    auto ids = registered_laws();
    CHECK(ids.size() == 53);
    for (const char* id : {"L2.1", "L2.2.i", "L2.2.v", "L2.3.iv", "D.ix", "P3.1", "P3.10",
                           "P3.17", "C3.1", "C3.2", "P4.4", "P5.1", "P5.8", "S5.1.ii"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());

    auto suite = run_suite(default_law_context());
    CHECK(suite.size() == ids.size());
    auto pos = [&](const std::string& id) {
        for (std::size_t i = 0; i < suite.size(); ++i)
            if (suite[i].id == id) return i;
        return suite.size();
    };
    CHECK(pos("P3.2") < pos("P3.10"));
    CHECK(pos("L2.2.ii") < pos("L2.2.iii"));
    CHECK(pos("P4.4") < pos("P5.1"));
}

TEST_CASE("the worked-example context passes everything its hypotheses admit") {
    auto reports = run_suite(default_law_context());
    std::map<std::string, LawStatus> status;
    for (const auto& rep : reports) status[rep.id] = rep.status;

    // No law may fail on this context.
    for (const auto& rep : reports) {
        INFO(rep.id, ": ", rep.failure);
        CHECK(rep.status != LawStatus::Failed);
    }

    // Meet/join induce drastic (non-involutive) boundary negators here, so
    // exactly the laws hypothesising those report hypothesis-not-met.
    const std::vector<std::string> expect_unmet = {"P3.5", "P3.6", "P5.2",
                                                   "P5.4", "P5.7", "P5.8", "S5.1.ii"};
    std::vector<std::string> unmet;
    for (const auto& rep : reports)
        if (rep.status == LawStatus::HypothesisNotMet) unmet.push_back(rep.id);
    CHECK(unmet == expect_unmet);

    for (const auto& rep : reports)
        if (rep.status == LawStatus::HypothesisNotMet) CHECK_FALSE(rep.unmet_hypotheses.empty());
}

TEST_CASE("statuses render as their report strings") {
    CHECK(to_string(LawStatus::Passed) == "passed");
    CHECK(to_string(LawStatus::Failed) == "failed");
    CHECK(to_string(LawStatus::HypothesisNotMet) == "hypothesis-not-met");
}

TEST_CASE("threshold implicators break adjointness, with a replayable witness") {
    auto ctx = default_law_context();
    ctx.res_impl = BinaryConnective::threshold_residual(ctx.lattice);
    ctx.cores_impl = BinaryConnective::threshold_coresidual(ctx.lattice);

    auto rep = run_law("L2.1", ctx);
    REQUIRE(rep.status == LawStatus::Failed);
    CHECK_FALSE(rep.failure.empty());
    REQUIRE(rep.witness.is_object());
    CHECK(rep.witness.contains("u"));
    CHECK(rep.witness.contains("v"));
    CHECK(rep.witness.contains("w"));

    // the recorded witness still fails; an innocuous case does not
    CHECK(replay_failure("L2.1", ctx, rep.witness));
    nlohmann::ordered_json benign = {{"u", "0"}, {"v", "0"}, {"w", "0"}};
    CHECK_FALSE(replay_failure("L2.1", ctx, benign));
}

TEST_CASE("witness cases must name real elements") {
    auto ctx = default_law_context();
    nlohmann::ordered_json bogus = {{"u", "zz"}, {"v", "0"}, {"w", "0"}};
    CHECK_THROWS_AS(replay_failure("L2.1", ctx, bogus), ParseError);
}

TEST_CASE("system round-trip dualities pass where the induced negators are involutive") {
    for (std::size_t n : {std::size_t{2}}) {
        auto ctx = chain_context(n);
        CHECK(run_law("P5.7", ctx).status == LawStatus::Passed);
        CHECK(run_law("P5.8", ctx).status == LawStatus::Passed);
        CHECK(run_law("P5.2", ctx).status == LawStatus::Passed);
        CHECK(run_law("P5.4", ctx).status == LawStatus::Passed);
        CHECK(run_law("P3.5", ctx).status == LawStatus::Passed);
        CHECK(run_law("P3.6", ctx).status == LawStatus::Passed);
    }

    // the 2x2 product also has involutive induced negators under meet/join
    auto sq = square_lattice();
    auto lat = std::static_pointer_cast<const Lattice>(sq);
    LawContext ctx;
    ctx.lattice = lat;
    ctx.theta = BinaryConnective::meet_overlap(lat);
    ctx.eta = BinaryConnective::join_grouping(lat);
    ctx.res_impl = derive_residual(*ctx.theta);
    ctx.cores_impl = derive_coresidual(*ctx.eta);
    std::vector<Elem> rev;
    for (std::size_t i = 0; i < lat->size(); ++i) rev.push_back(lat->element(lat->size() - 1 - i));
    ctx.negator = Negator::from_table(lat, rev, "complement");
    auto u = Universe::make("X", {"x1", "x2"});
    ctx.partition = block_partition(u, lat, 2);
    ctx.universe = u;
    ctx.partition2 = LFuzzyPartition::validate({"B1"}, {LFuzzySet::constant(u, lat, lat->top())});
    CHECK(run_law("P5.7", ctx).status == LawStatus::Passed);
    CHECK(run_law("P5.8", ctx).status == LawStatus::Passed);
}

TEST_CASE("unknown ids and missing context slots are reported as such") {
    auto ctx = default_law_context();
    CHECK_THROWS_AS(run_law("P99.1", ctx), UnknownLawError);

    LawContext bare;
    bare.lattice = ctx.lattice;
    CHECK_THROWS_AS(run_law("L2.1", bare), MissingContextSlotError);
    CHECK_THROWS_AS(run_law("P3.7", ctx.partition2 ? [&] {
        LawContext c = ctx;
        c.partition2.reset();
        return c;
    }() : ctx), MissingContextSlotError);
}

TEST_CASE("laws that enumerate the carrier refuse the unit interval") {
    auto unit = UnitIntervalLattice::make();
    LawContext ctx;
    ctx.lattice = unit;
    ctx.theta = BinaryConnective::meet_overlap(unit);
    ctx.eta = BinaryConnective::join_grouping(unit);
    ctx.res_impl = BinaryConnective::godel_residual(unit);
    ctx.cores_impl = BinaryConnective::dual_godel_coresidual(unit);
    ctx.negator = Negator::standard(unit);
    CHECK_THROWS_AS(run_law("L2.1", ctx), FiniteCarrierRequiredError);
}

TEST_CASE("a zero budget is rejected") {
    auto ctx = default_law_context();
    ctx.budget = 0;
    CHECK_THROWS_AS(run_law("L2.1", ctx), std::invalid_argument);
}

TEST_CASE("context structures must share the lattice instance") {
    auto a = chain_lattice(3);
    auto b = chain_lattice(3); // same shape, different object
    LawContext ctx;
    ctx.lattice = a;
    ctx.theta = BinaryConnective::meet_overlap(b);
    ctx.eta = BinaryConnective::join_grouping(a);
    ctx.res_impl = derive_residual(BinaryConnective::meet_overlap(a));
    ctx.cores_impl = derive_coresidual(*ctx.eta);
    CHECK_THROWS_AS(run_law("L2.1", ctx), CarrierMismatchError);
}

TEST_CASE("sampled case spaces are deterministic in the seed") {
    auto ctx = default_law_context();
    ctx.budget = 64;
    ctx.seed = 7;
    auto first = run_law("P3.9", ctx);
    auto second = run_law("P3.9", ctx);
    CHECK(first.status == second.status);
    CHECK(first.cases_checked == second.cases_checked);
    CHECK(first.status == LawStatus::Passed);

    ctx.seed = 8;
    auto third = run_law("P3.9", ctx);
    CHECK(third.status == LawStatus::Passed); // different sample, same verdict
}

TEST_CASE("fuzzy-set enumeration is exhaustive under the budget, sampled above it") {
    auto c2 = chain_lattice(2);
    auto lat2 = std::static_pointer_cast<const Lattice>(c2);
    auto u2 = Universe::make("X", {"x1", "x2"});
    bool exhaustive = false;
    auto small = enumerate_fuzzy_sets(lat2, u2, 100, 1, &exhaustive);
    CHECK(small.size() == 4);
    CHECK(exhaustive);

    auto lat8 = std::static_pointer_cast<const Lattice>(example8_lattice());
    auto u3 = example8_universe();
    auto full = enumerate_fuzzy_sets(lat8, u3, 4096, 1, &exhaustive);
    CHECK(full.size() == 512);
    CHECK(exhaustive);

    auto sampled = enumerate_fuzzy_sets(lat8, u3, 100, 1, &exhaustive);
    CHECK(sampled.size() == 100);
    CHECK_FALSE(exhaustive);
    auto sampled_again = enumerate_fuzzy_sets(lat8, u3, 100, 1, &exhaustive);
    for (std::size_t i = 0; i < sampled.size(); ++i)
        CHECK(sampled[i].equal(sampled_again[i]));
}

TEST_CASE("every failed report carries a witness that replays") {
    // Build a context that fails several transform laws at once: a negator
    // that is not involutive makes the duality propositions fail their gate,
    // while threshold implicators break the residuation facts outright.
    auto ctx = default_law_context();
    ctx.res_impl = BinaryConnective::threshold_residual(ctx.lattice);

    for (const char* id : {"L2.1", "L2.2.i"}) {
        auto rep = run_law(id, ctx);
        if (rep.status == LawStatus::Failed) {
            CHECK(replay_failure(id, ctx, rep.witness));
        }
    }
}
