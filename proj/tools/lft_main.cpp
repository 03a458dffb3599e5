// Command-line front end. Subcommands:
//   check          validate lattices, connectives, negators, and partitions
//   laws           run the algebraic law suite over a chosen context
//   paper-example  replay the built-in worked example against its published tables
//   transform      compress a CSV signal or PGM image with a direct transform
//   reconstruct    rebuild a signal/image from a saved components file
// Exit codes: 0 success, 1 validation or law failures, 2 usage/parse errors.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lft/connectives.hpp"
#include "lft/errors.hpp"
#include "lft/fuzzy.hpp"
#include "lft/lattice.hpp"
#include "lft/lawcheck.hpp"
#include "lft/partition.hpp"
#include "lft/serialize.hpp"
#include "lft/signal_io.hpp"
#include "lft/transforms.hpp"
#include "lft/worked_example.hpp"

namespace {

using lft::Json;

// ---------------------------------------------------------------------------
// shared plumbing

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lft::ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw lft::ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lft::ParseError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw lft::ParseError("write to '" + path + "' failed");
}

std::shared_ptr<const lft::Lattice> load_lattice(const std::string& arg) {
    if (auto builtin = lft::builtin_lattice(arg)) return builtin;
    return lft::lattice_from_json(read_json_file(arg));
}

std::shared_ptr<const lft::UnitIntervalLattice>
require_unit_carrier(const std::shared_ptr<const lft::Lattice>& lat, const std::string& who) {
    auto unit = std::dynamic_pointer_cast<const lft::UnitIntervalLattice>(lat);
    if (!unit) throw lft::ParseError(who + " requires the unit-interval carrier");
    return unit;
}

lft::BinaryConnective load_overlap(const std::string& arg,
                                   const std::shared_ptr<const lft::Lattice>& lat) {
    if (arg == "meet" || arg == "min" || arg == "theta_M")
        return lft::BinaryConnective::meet_overlap(lat);
    if (arg == "product")
        return lft::BinaryConnective::product_overlap(require_unit_carrier(lat, "overlap 'product'"));
    auto conn = lft::connective_from_json(read_json_file(arg), lat);
    if (conn.kind() != lft::ConnectiveKind::Overlap)
        throw lft::KindMismatchError("--overlap file '" + arg + "' holds a " + lft::to_string(conn.kind()));
    return conn;
}

lft::BinaryConnective load_grouping(const std::string& arg,
                                    const std::shared_ptr<const lft::Lattice>& lat) {
    if (arg == "join" || arg == "max" || arg == "eta_M")
        return lft::BinaryConnective::join_grouping(lat);
    if (arg == "probabilistic-sum" || arg == "prob-sum")
        return lft::BinaryConnective::probabilistic_sum(
            require_unit_carrier(lat, "grouping 'probabilistic-sum'"));
    auto conn = lft::connective_from_json(read_json_file(arg), lat);
    if (conn.kind() != lft::ConnectiveKind::Grouping)
        throw lft::KindMismatchError("--grouping file '" + arg + "' holds a " + lft::to_string(conn.kind()));
    return conn;
}

lft::Negator load_negator(const std::string& arg,
                          const std::shared_ptr<const lft::Lattice>& lat) {
    if (arg == "standard")
        return lft::Negator::standard(require_unit_carrier(lat, "negator 'standard'"));
    if (arg == "reversal" || arg == "chain-reversal") {
        auto table = std::dynamic_pointer_cast<const lft::TableLattice>(lat);
        if (!table || !table->is_chain())
            throw lft::ParseError("negator 'reversal' requires a finite chain carrier");
        return lft::Negator::chain_reversal(table);
    }
    return lft::negator_from_json(read_json_file(arg), lat);
}

// Default negator for `laws`: the worked example's table on its own lattice,
// otherwise the order-reversing image list when that really is a negator.
lft::Negator auto_negator(const std::shared_ptr<const lft::Lattice>& lat) {
    auto table = std::dynamic_pointer_cast<const lft::TableLattice>(lat);
    if (!table)
        throw lft::ParseError("no default negator for carrier '" + lat->name() + "'; pass --negator");
    if (table->name() == "example8") return lft::example8_negator(lat);
    std::vector<lft::Elem> images;
    images.reserve(table->size());
    for (std::size_t i = 0; i < table->size(); ++i)
        images.push_back(table->element(table->size() - 1 - i));
    auto candidate = lft::Negator::from_table(lat, std::move(images), "order-reversal");
    if (lft::validate_negator(candidate).passed) return candidate;
    throw lft::ParseError("order reversal is not a negator on '" + lat->name() + "'; pass --negator");
}

std::string join_labels(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string render_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += row[c];
            if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    std::cout << text;
    if (!out_path.empty()) write_text_file(out_path, text);
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
    std::string lattice;
    std::string overlap;
    std::string grouping;
    std::string negator;
    std::string partition;
    std::string format = "table";
    std::string out;
};

std::string validation_table(const std::vector<lft::ValidationReport>& reports) {
    std::string out;
    for (const auto& rep : reports) {
        out += rep.passed ? "passed  " : "FAILED  ";
        out += rep.subject;
        out += "  (" + std::to_string(rep.cases_checked) + " cases";
        out += rep.exhaustive ? ", exhaustive)" : ")";
        out += '\n';
        for (const auto& fact : rep.facts)
            out += "    " + fact.first + ": " + fact.second + '\n';
        for (const auto& v : rep.violations) {
            out += "    violation " + v.axiom;
            if (!v.witness.empty()) out += " at (" + join_labels(v.witness, ",") + ")";
            if (!v.detail.empty()) out += ": " + v.detail;
            out += '\n';
        }
        for (const auto& note : rep.notes)
            out += "    note: " + note + '\n';
    }
    return out;
}

int run_check(const CheckArgs& args) {
    std::vector<lft::ValidationReport> reports;
    std::shared_ptr<const lft::Lattice> lat;

    // A malformed file is a usage error (propagates, exit 2); a well-formed
    // structure that violates its defining laws becomes a failed report.
    try {
        lat = load_lattice(args.lattice);
        lft::ValidationReport rep;
        rep.subject = "lattice '" + lat->name() + "'";
        if (lat->finite()) {
            rep.cases_checked = lat->size() * lat->size();
            rep.facts.emplace_back("elements", std::to_string(lat->size()));
            if (auto table = std::dynamic_pointer_cast<const lft::TableLattice>(lat))
                rep.facts.emplace_back("chain", table->is_chain() ? "yes" : "no");
        } else {
            rep.exhaustive = false;
            rep.facts.emplace_back("carrier", "unit interval");
        }
        rep.facts.emplace_back("bottom", lat->label(lat->bottom()));
        rep.facts.emplace_back("top", lat->label(lat->top()));
        rep.finish();
        reports.push_back(std::move(rep));
    } catch (const lft::ParseError&) {
        throw;
    } catch (const lft::Error& e) {
        lft::ValidationReport rep;
        rep.subject = "lattice from '" + args.lattice + "'";
        rep.add({e.code(), {}, e.what()});
        rep.finish();
        reports.push_back(std::move(rep));
    }

    auto check_structure = [&](const std::string& subject, auto&& build) {
        try {
            reports.push_back(build());
        } catch (const lft::ParseError&) {
            throw;
        } catch (const lft::Error& e) {
            lft::ValidationReport rep;
            rep.subject = subject;
            rep.add({e.code(), {}, e.what()});
            rep.finish();
            reports.push_back(std::move(rep));
        }
    };

    if (lat) {
        if (!args.overlap.empty())
            check_structure("overlap from '" + args.overlap + "'", [&] {
                return lft::validate_overlap(load_overlap(args.overlap, lat));
            });
        if (!args.grouping.empty())
            check_structure("grouping from '" + args.grouping + "'", [&] {
                return lft::validate_grouping(load_grouping(args.grouping, lat));
            });
        if (!args.negator.empty())
            check_structure("negator from '" + args.negator + "'", [&] {
                return lft::validate_negator(load_negator(args.negator, lat));
            });
        if (!args.partition.empty())
            check_structure("partition from '" + args.partition + "'", [&] {
                auto part = lft::partition_from_json(read_json_file(args.partition), lat);
                lft::ValidationReport rep;
                rep.subject = "partition from '" + args.partition + "'";
                rep.cases_checked = part.size() * part.universe().size();
                rep.facts.emplace_back("members", std::to_string(part.size()));
                rep.facts.emplace_back("points", std::to_string(part.universe().size()));
                rep.facts.emplace_back("labels", join_labels(part.labels(), ","));
                rep.finish();
                return rep;
            });
    }

    bool all_passed = true;
    for (const auto& rep : reports) all_passed = all_passed && rep.passed;

    if (args.format == "json") {
        Json arr = Json::array();
        for (const auto& rep : reports) arr.push_back(lft::validation_report_to_json(rep));
        emit(arr.dump(2) + "\n", args.out);
    } else {
        emit(validation_table(reports), args.out);
    }
    return all_passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// laws

struct LawsArgs {
    std::string lattice = "example8";
    std::string overlap = "meet";
    std::string grouping = "join";
    std::string negator = "auto";
    std::string partition;
    std::vector<std::string> laws;
    std::size_t budget = 4096;
    std::uint64_t seed = 1;
    std::string format = "table";
    std::string out;
};

lft::LFuzzyPartition default_partition(const std::shared_ptr<const lft::Lattice>& lat) {
    if (lat->name() == "example8") return lft::example8_partition(lat);
    auto universe = lft::Universe::make("X", {"x1", "x2", "x3"});
    return lft::block_partition(universe, lat, 2);
}

std::string laws_table(const std::vector<lft::LawReport>& reports) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"law", "status", "cases", "detail"});
    for (const auto& rep : reports) {
        std::string detail;
        if (rep.status == lft::LawStatus::Failed) {
            detail = rep.failure;
            if (!rep.witness.is_null()) detail += "  witness " + rep.witness.dump();
        } else if (rep.status == lft::LawStatus::HypothesisNotMet) {
            detail = "unmet: " + join_labels(rep.unmet_hypotheses, "; ");
        }
        rows.push_back({rep.id, lft::to_string(rep.status),
                        std::to_string(rep.cases_checked), detail});
    }
    return render_rows(rows);
}

int run_laws(const LawsArgs& args) {
    lft::LawContext ctx;
    ctx.lattice = load_lattice(args.lattice);
    ctx.theta = load_overlap(args.overlap, ctx.lattice);
    ctx.eta = load_grouping(args.grouping, ctx.lattice);
    ctx.res_impl = lft::derive_residual(*ctx.theta);
    ctx.cores_impl = lft::derive_coresidual(*ctx.eta);
    ctx.negator = args.negator == "auto" ? auto_negator(ctx.lattice)
                                         : load_negator(args.negator, ctx.lattice);
    if (args.partition.empty())
        ctx.partition = default_partition(ctx.lattice);
    else
        ctx.partition = lft::partition_from_json(read_json_file(args.partition), ctx.lattice);
    ctx.universe = ctx.partition->universe_ptr();
    ctx.partition2 = lft::LFuzzyPartition::validate(
        {"B1"}, {lft::LFuzzySet::constant(ctx.universe, ctx.lattice, ctx.lattice->top())});
    ctx.budget = args.budget;
    ctx.seed = args.seed;

    std::vector<lft::LawReport> reports;
    if (args.laws.empty()) {
        reports = lft::run_suite(ctx);
    } else {
        reports.reserve(args.laws.size());
        for (const auto& id : args.laws) reports.push_back(lft::run_law(id, ctx));
    }

    bool any_failed = false;
    for (const auto& rep : reports) any_failed = any_failed || rep.status == lft::LawStatus::Failed;

    if (args.format == "json") {
        Json arr = Json::array();
        for (const auto& rep : reports) arr.push_back(lft::law_report_to_json(rep));
        emit(arr.dump(2) + "\n", args.out);
    } else {
        emit(laws_table(reports), args.out);
    }
    return any_failed ? 1 : 0;
}

// ---------------------------------------------------------------------------
// paper-example

int run_paper_example(const std::string& format, const std::string& out) {
    auto result = lft::replay_worked_example();
    auto is_known = [&](const std::string& id) {
        return std::find(result.known_deviations.begin(), result.known_deviations.end(), id) !=
               result.known_deviations.end();
    };

    if (format == "json") {
        Json doc;
        Json rows = Json::array();
        for (const auto& row : result.rows) {
            rows.push_back({{"id", row.id},
                            {"published", row.published},
                            {"computed", row.computed},
                            {"match", row.match},
                            {"known_deviation", is_known(row.id)}});
        }
        doc["rows"] = std::move(rows);
        doc["known_deviations"] = result.known_deviations;
        doc["as_published"] = result.as_published();
        emit(doc.dump(2) + "\n", out);
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"row", "published", "computed", "match"});
        for (const auto& row : result.rows) {
            std::string flag = row.match ? "yes" : (is_known(row.id) ? "known-deviation" : "MISMATCH");
            rows.push_back({row.id, row.published, row.computed, flag});
        }
        std::string text = render_rows(rows);
        text += result.as_published() ? "replay matches the published tables\n"
                                      : "replay DIFFERS from the published tables\n";
        emit(text, out);
    }
    return result.as_published() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// transform / reconstruct

struct TransformArgs {
    std::string input;
    std::string kind = "upper-theta";
    std::string overlap = "min";
    std::string grouping = "max";
    std::size_t blocks = 8;
    std::optional<double> width;
    std::string normalize = "auto";
    std::string out;
};

struct UnitChain {
    lft::BinaryConnective direct;
    lft::BinaryConnective inverse;
    bool direct_negator;
    bool inverse_negator;
};

lft::BinaryConnective unit_overlap(const std::string& name,
                                   const std::shared_ptr<const lft::UnitIntervalLattice>& unit) {
    if (name == "min" || name == "meet" || name == "theta_M")
        return lft::BinaryConnective::meet_overlap(unit);
    if (name == "product") return lft::BinaryConnective::product_overlap(unit);
    throw lft::ParseError("unknown overlap '" + name + "' (choose min or product)");
}

lft::BinaryConnective unit_residual(const std::string& name,
                                    const std::shared_ptr<const lft::UnitIntervalLattice>& unit) {
    if (name == "min" || name == "meet" || name == "theta_M")
        return lft::BinaryConnective::godel_residual(unit);
    if (name == "product") return lft::BinaryConnective::goguen_residual(unit);
    throw lft::ParseError("unknown overlap '" + name + "' (choose min or product)");
}

lft::BinaryConnective unit_grouping(const std::string& name,
                                    const std::shared_ptr<const lft::UnitIntervalLattice>& unit) {
    if (name == "max" || name == "join" || name == "eta_M")
        return lft::BinaryConnective::join_grouping(unit);
    if (name == "probabilistic-sum" || name == "prob-sum")
        return lft::BinaryConnective::probabilistic_sum(unit);
    throw lft::ParseError("unknown grouping '" + name + "' (choose max or probabilistic-sum)");
}

lft::BinaryConnective unit_coresidual(const std::string& name,
                                      const std::shared_ptr<const lft::UnitIntervalLattice>& unit) {
    if (name == "max" || name == "join" || name == "eta_M")
        return lft::BinaryConnective::dual_godel_coresidual(unit);
    if (name == "probabilistic-sum" || name == "prob-sum")
        return lft::BinaryConnective::dual_goguen_coresidual(unit);
    throw lft::ParseError("unknown grouping '" + name + "' (choose max or probabilistic-sum)");
}

UnitChain chain_for(lft::DirectKind kind, const std::string& overlap, const std::string& grouping,
                    const std::shared_ptr<const lft::UnitIntervalLattice>& unit) {
    lft::BinaryConnective direct = [&] {
        switch (kind) {
            case lft::DirectKind::UpperTheta: return unit_overlap(overlap, unit);
            case lft::DirectKind::LowerResidual: return unit_residual(overlap, unit);
            case lft::DirectKind::LowerEta: return unit_grouping(grouping, unit);
            case lft::DirectKind::UpperCoResidual: return unit_coresidual(grouping, unit);
        }
        throw lft::ParseError("unknown transform kind");
    }();
    lft::BinaryConnective inverse = [&] {
        switch (kind) {
            case lft::DirectKind::UpperTheta: return unit_residual(overlap, unit);
            case lft::DirectKind::LowerResidual: return unit_overlap(overlap, unit);
            case lft::DirectKind::LowerEta: return unit_coresidual(grouping, unit);
            case lft::DirectKind::UpperCoResidual: return unit_grouping(grouping, unit);
        }
        throw lft::ParseError("unknown transform kind");
    }();
    return UnitChain{std::move(direct), std::move(inverse), lft::needs_negator(kind),
                     lft::needs_negator(lft::paired_inverse(kind))};
}

std::string strip_suffix(const std::string& s, const std::string& suffix) {
    if (s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0)
        return s.substr(0, s.size() - suffix.size());
    return s;
}

std::string default_prefix(const std::string& input) {
    auto slash = input.find_last_of('/');
    auto dot = input.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return input;
    return input.substr(0, dot);
}

bool sniff_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lft::ParseError("cannot open '" + path + "'");
    char magic[2] = {0, 0};
    in.read(magic, 2);
    return in.gcount() == 2 && magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5');
}

Json normalization_json(const lft::Normalization& norm) {
    return Json{{"applied", norm.applied},
                {"degenerate", norm.degenerate},
                {"min", norm.min},
                {"max", norm.max}};
}

lft::Normalization normalization_from_json(const Json& j) {
    lft::Normalization norm;
    if (!j.is_object() || !j.contains("applied") || !j.contains("min") || !j.contains("max"))
        throw lft::ParseError("components file lacks a usable 'normalization' object");
    norm.applied = j.at("applied").get<bool>();
    norm.degenerate = j.value("degenerate", false);
    norm.min = j.at("min").get<double>();
    norm.max = j.at("max").get<double>();
    return norm;
}

void write_reconstruction(const std::string& path, const std::vector<double>& unit_values,
                          const lft::Normalization& norm, const Json& source) {
    const std::string format = source.at("format").get<std::string>();
    if (format == "csv") {
        std::vector<double> out;
        out.reserve(unit_values.size());
        for (double u : unit_values) out.push_back(norm.invert(u));
        lft::write_csv_signal(path, out);
    } else if (format == "pgm") {
        lft::PgmImage like;
        like.width = source.at("width").get<int>();
        like.height = source.at("height").get<int>();
        like.maxval = source.at("maxval").get<int>();
        like.binary = source.value("binary", true);
        std::vector<double> out;
        out.reserve(unit_values.size());
        for (double u : unit_values) out.push_back(norm.invert(u));
        lft::write_pgm(path, lft::unit_to_pgm(out, like));
    } else {
        throw lft::ParseError("components file names unknown source format '" + format + "'");
    }
}

int run_transform(const TransformArgs& args) {
    const bool is_pgm = sniff_pgm(args.input);
    lft::PgmImage img;
    std::vector<double> values;
    Json source;
    if (is_pgm) {
        img = lft::read_pgm(args.input);
        values = lft::pgm_to_unit(img);
        source = Json{{"format", "pgm"},
                      {"width", img.width},
                      {"height", img.height},
                      {"maxval", img.maxval},
                      {"binary", img.binary}};
    } else {
        values = lft::read_csv_signal(args.input);
        source = Json{{"format", "csv"}, {"samples", values.size()}};
    }

    auto norm = lft::normalize_signal(values, args.normalize);
    if (norm.degenerate)
        std::cerr << "warning: constant input; normalized to all zeros\n";

    auto unit = lft::UnitIntervalLattice::make();
    std::shared_ptr<const lft::Lattice> lat = unit;
    std::vector<std::string> points;
    points.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) points.push_back("x" + std::to_string(i + 1));
    auto universe = lft::Universe::make(is_pgm ? "pixels" : "samples", std::move(points));
    std::optional<double> width = args.width;
    if (!width && args.blocks > 0 && values.size() / args.blocks > 0)
        width = static_cast<double>(values.size() / args.blocks);
    auto partition = lft::block_partition(universe, lat, args.blocks, width);

    std::vector<lft::Elem> elems;
    elems.reserve(values.size());
    for (double v : values) elems.push_back(unit->value(v));
    lft::LFuzzySet f(universe, lat, std::move(elems));

    const auto kind = lft::direct_kind_from_string(args.kind);
    if (!kind) throw lft::ParseError("unknown transform kind '" + args.kind + "'");
    auto chain = chain_for(*kind, args.overlap, args.grouping, unit);
    auto negator = lft::Negator::standard(unit);

    auto components = lft::direct_transform(*kind, partition, chain.direct,
                                            chain.direct_negator ? &negator : nullptr, f);
    auto recon = lft::inverse_transform(lft::paired_inverse(*kind), partition, chain.inverse,
                                        chain.inverse_negator ? &negator : nullptr, components);

    Json doc = lft::direct_result_to_json(components);
    doc["lattice"] = "unit";
    doc["overlap"] = args.overlap;
    doc["grouping"] = args.grouping;
    doc["partition"] = lft::partition_to_json(partition);
    doc["normalization"] = normalization_json(norm);
    doc["source"] = source;

    const std::string prefix = args.out.empty() ? default_prefix(args.input) : args.out;
    const std::string components_path = prefix + ".components.json";
    const std::string recon_path = prefix + (is_pgm ? ".reconstruction.pgm" : ".reconstruction.csv");
    write_text_file(components_path, doc.dump(2) + "\n");

    std::vector<double> recon_unit;
    recon_unit.reserve(recon.size());
    for (std::size_t i = 0; i < recon.size(); ++i) recon_unit.push_back(recon.at(i).raw);
    write_reconstruction(recon_path, recon_unit, norm, source);

    double max_dev = 0.0, sum_dev = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        double d = recon_unit[i] - values[i];
        if (d < 0) d = -d;
        max_dev = std::max(max_dev, d);
        sum_dev += d;
    }
    const double mean_dev = values.empty() ? 0.0 : sum_dev / static_cast<double>(values.size());

    const bool upper = lft::is_upper(*kind);
    constexpr double kTol = 1e-9;
    std::size_t bound_violations = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const bool ok = upper ? recon_unit[i] >= values[i] - kTol : recon_unit[i] <= values[i] + kTol;
        if (!ok) ++bound_violations;
    }

    std::cout << "kind: " << lft::to_string(*kind) << "  members: " << partition.size()
              << "  samples: " << values.size() << "\n";
    std::cout << "max |f - reconstruction| = " << lft::format_real(max_dev)
              << "  mean = " << lft::format_real(mean_dev) << " (unit domain)\n";
    std::cout << "bound: reconstruction " << (upper ? ">=" : "<=") << " input "
              << (bound_violations == 0 ? "holds" : "VIOLATED at " + std::to_string(bound_violations) + " points")
              << "\n";
    std::cout << "wrote " << components_path << " and " << recon_path << "\n";
    return bound_violations == 0 ? 0 : 1;
}

struct ReconstructArgs {
    std::string input;
    std::string out;
};

int run_reconstruct(const ReconstructArgs& args) {
    Json doc = read_json_file(args.input);
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("components") ||
        !doc.contains("partition") || !doc.contains("source"))
        throw lft::ParseError("'" + args.input + "' is not a components file");
    if (doc.value("lattice", "") != std::string("unit"))
        throw lft::ParseError("components file must use the unit-interval carrier");

    auto unit = lft::UnitIntervalLattice::make();
    std::shared_ptr<const lft::Lattice> lat = unit;
    auto partition = lft::partition_from_json(doc.at("partition"), lat);
    Json dr_json{{"kind", doc.at("kind")}, {"components", doc.at("components")}};
    auto components = lft::direct_result_from_json(dr_json, lat);
    auto norm = normalization_from_json(doc.value("normalization", Json::object()));

    auto chain = chain_for(components.kind, doc.value("overlap", "min"),
                           doc.value("grouping", "max"), unit);
    auto negator = lft::Negator::standard(unit);
    auto recon = lft::inverse_transform(lft::paired_inverse(components.kind), partition, chain.inverse,
                                        chain.inverse_negator ? &negator : nullptr, components);

    std::vector<double> recon_unit;
    recon_unit.reserve(recon.size());
    for (std::size_t i = 0; i < recon.size(); ++i) recon_unit.push_back(recon.at(i).raw);

    const Json& source = doc.at("source");
    const bool is_pgm = source.at("format").get<std::string>() == "pgm";
    std::string prefix = args.out;
    if (prefix.empty()) prefix = default_prefix(strip_suffix(args.input, ".components.json"));
    const std::string recon_path = prefix + (is_pgm ? ".reconstruction.pgm" : ".reconstruction.csv");
    write_reconstruction(recon_path, recon_unit, norm, source);

    std::cout << "kind: " << lft::to_string(components.kind) << "  members: " << partition.size()
              << "  points: " << recon_unit.size() << "\n";
    std::cout << "wrote " << recon_path << "\n";
    return 0;
}

} // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"lattice fuzzy-transform toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    auto* check = app.add_subcommand("check", "Validate structures from files or builtin names");
    CheckArgs check_args;
    check->add_option("--lattice", check_args.lattice,
                      "Builtin (example8, chainN, square, unit) or lattice JSON file")->required();
    check->add_option("--overlap", check_args.overlap, "meet|min|theta_M, product, or connective JSON file");
    check->add_option("--grouping", check_args.grouping, "join|max|eta_M, probabilistic-sum, or connective JSON file");
    check->add_option("--negator", check_args.negator, "standard, reversal, or negator JSON file");
    check->add_option("--partition", check_args.partition, "partition JSON file");
    check->add_option("--format", check_args.format, "Report format")
        ->check(CLI::IsMember({"json", "table"}));
    check->add_option("--out", check_args.out, "Also write the report to this path");
    check->callback([&] { rc = run_check(check_args); });

    auto* laws = app.add_subcommand("laws", "Run the algebraic law suite");
    LawsArgs laws_args;
    laws->add_option("--lattice", laws_args.lattice,
                     "Builtin (example8, chainN, square) or lattice JSON file");
    laws->add_option("--overlap", laws_args.overlap, "meet|min|theta_M, product, or connective JSON file");
    laws->add_option("--grouping", laws_args.grouping, "join|max|eta_M, probabilistic-sum, or connective JSON file");
    laws->add_option("--negator", laws_args.negator,
                     "auto, standard, reversal, or negator JSON file (implicators are always derived)");
    laws->add_option("--partition", laws_args.partition, "partition JSON file");
    laws->add_option("--law", laws_args.laws, "Run only this law id (repeatable)");
    laws->add_option("--budget", laws_args.budget, "Cap on enumerated fuzzy sets per law");
    laws->add_option("--seed", laws_args.seed, "Seed for sampled case spaces");
    laws->add_option("--format", laws_args.format, "Report format")
        ->check(CLI::IsMember({"json", "table"}));
    laws->add_option("--out", laws_args.out, "Also write the report to this path");
    laws->callback([&] { rc = run_laws(laws_args); });

    auto* replay = app.add_subcommand(
        "paper-example", "Replay the built-in worked example against its published tables");
    std::string replay_format = "table";
    std::string replay_out;
    replay->add_option("--format", replay_format, "Report format")
        ->check(CLI::IsMember({"json", "table"}));
    replay->add_option("--out", replay_out, "Also write the report to this path");
    replay->callback([&] { rc = run_paper_example(replay_format, replay_out); });

    auto* transform = app.add_subcommand(
        "transform", "Compress a CSV signal or PGM image and write components + reconstruction");
    TransformArgs transform_args;
    transform->add_option("input", transform_args.input, "CSV signal or PGM (P2/P5) image")->required();
    transform->add_option("--kind", transform_args.kind, "Direct transform kind")
        ->check(CLI::IsMember({"upper-theta", "lower-eta", "upper-coresidual", "lower-residual"}));
    transform->add_option("--overlap", transform_args.overlap,
                          "Overlap family for upper-theta/lower-residual chains")
        ->check(CLI::IsMember({"min", "meet", "theta_M", "product"}));
    transform->add_option("--grouping", transform_args.grouping,
                          "Grouping family for lower-eta/upper-coresidual chains")
        ->check(CLI::IsMember({"max", "join", "eta_M", "probabilistic-sum", "prob-sum"}));
    transform->add_option("--blocks", transform_args.blocks, "Number of partition members");
    transform->add_option("--width", transform_args.width,
                          "Triangular decay width in samples (default: block length)");
    transform->add_option("--normalize", transform_args.normalize, "Min-max rescaling policy")
        ->check(CLI::IsMember({"auto", "always", "never"}));
    transform->add_option("--out", transform_args.out, "Output prefix (default: input minus extension)");
    transform->callback([&] { rc = run_transform(transform_args); });

    auto* reconstruct = app.add_subcommand(
        "reconstruct", "Rebuild a signal/image from a saved components file");
    ReconstructArgs reconstruct_args;
    reconstruct->add_option("input", reconstruct_args.input, "components JSON file")->required();
    reconstruct->add_option("--out", reconstruct_args.out, "Output prefix");
    reconstruct->callback([&] { rc = run_reconstruct(reconstruct_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const lft::Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
