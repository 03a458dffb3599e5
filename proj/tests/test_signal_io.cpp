#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "lft/errors.hpp"
#include "lft/lattice.hpp"
#include "lft/signal_io.hpp"

using namespace lft;
namespace fs = std::filesystem;

namespace {

// Scratch directory cleaned up at the end of every test case.
struct Scratch {
    fs::path dir;
    Scratch() : dir(fs::path("tmp_signal_io")) { fs::create_directories(dir); }
    ~Scratch() { std::error_code ec; fs::remove_all(dir, ec); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    std::string raw(const std::string& name, const std::string& bytes) const {
        const std::string p = path(name);
        std::ofstream out(p, std::ios::binary);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        return p;
    }
};

std::string message_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("csv signals round-trip exactly") {
    Scratch tmp;
    const std::vector<double> values = {0.0, 0.5, 1.0, 0.25, 0.3333333333333333, 1e-9};
    const std::string p = tmp.path("signal.csv");
    write_csv_signal(p, values);
    CHECK(read_csv_signal(p) == values);
}

TEST_CASE("csv reading skips blank lines and trims whitespace") {
    Scratch tmp;
    const std::string p = tmp.raw("spaced.csv", "\n  0.5  \n\n\t1\n   \n0\n");
    CHECK(read_csv_signal(p) == std::vector<double>{0.5, 1.0, 0.0});
}

TEST_CASE("csv errors carry the 1-based line number") {
    Scratch tmp;
    const std::string p = tmp.raw("bad.csv", "0.5\n\nabc\n");
    CHECK_THROWS_AS(read_csv_signal(p), ParseError);
    const std::string msg = message_of([&] { read_csv_signal(p); });
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("abc") != std::string::npos);

    const std::string nan_path = tmp.raw("nan.csv", "nan\n");
    CHECK_THROWS_AS(read_csv_signal(nan_path), ParseError);
    const std::string huge = tmp.raw("huge.csv", "1e999\n");
    CHECK_THROWS_AS(read_csv_signal(huge), ParseError);
    const std::string trailing = tmp.raw("trail.csv", "0.5x\n");
    CHECK_THROWS_AS(read_csv_signal(trailing), ParseError);
}

TEST_CASE("an empty csv and a missing file are distinct parse errors") {
    Scratch tmp;
    const std::string empty = tmp.raw("empty.csv", "\n  \n");
    CHECK(message_of([&] { read_csv_signal(empty); }).find("no samples") != std::string::npos);
    CHECK(message_of([&] { read_csv_signal(tmp.path("absent.csv")); }).find("cannot open") !=
          std::string::npos);
}

TEST_CASE("ascii images round-trip") {
    Scratch tmp;
    PgmImage img;
    img.width = 3;
    img.height = 2;
    img.maxval = 255;
    img.binary = false;
    img.pixels = {0, 10, 20, 200, 255, 128};
    const std::string p = tmp.path("img.pgm");
    write_pgm(p, img);
    PgmImage back = read_pgm(p);
    CHECK(back.width == img.width);
    CHECK(back.height == img.height);
    CHECK(back.maxval == img.maxval);
    CHECK_FALSE(back.binary);
    CHECK(back.pixels == img.pixels);
}

TEST_CASE("binary images round-trip, including raster bytes that look like whitespace") {
    Scratch tmp;
    PgmImage img;
    img.width = 2;
    img.height = 2;
    img.maxval = 255;
    img.binary = true;
    img.pixels = {10, 0, 255, 32}; // 10 = '\n', 32 = ' '
    const std::string p = tmp.path("img5.pgm");
    write_pgm(p, img);
    PgmImage back = read_pgm(p);
    CHECK(back.binary);
    CHECK(back.pixels == img.pixels);
}

TEST_CASE("pgm headers may contain comments") {
    Scratch tmp;
    const std::string p = tmp.raw("commented.pgm",
                                  "P2 # flavor\n# a comment line\n2 1 # size\n15\n7 15\n");
    PgmImage img = read_pgm(p);
    CHECK(img.width == 2);
    CHECK(img.height == 1);
    CHECK(img.maxval == 15);
    CHECK(img.pixels == std::vector<int>{7, 15});
}

TEST_CASE("malformed images are rejected with the reason") {
    Scratch tmp;
    CHECK_THROWS_AS(read_pgm(tmp.raw("notpgm.pgm", "P3\n1 1\n255\n0 0 0\n")),
                    UnsupportedFormatError);
    CHECK_THROWS_AS(read_pgm(tmp.raw("text.pgm", "hello")), UnsupportedFormatError);
    CHECK_THROWS_AS(read_pgm(tmp.raw("zero.pgm", "P2\n0 1\n255\n")), ParseError);
    CHECK_THROWS_AS(read_pgm(tmp.raw("badmax.pgm", "P2\n1 1\n0\n0\n")), ParseError);
    CHECK_THROWS_AS(read_pgm(tmp.raw("hugemax.pgm", "P2\n1 1\n70000\n0\n")), ParseError);
    CHECK_THROWS_AS(read_pgm(tmp.raw("wide.pgm", "P5\n1 1\n1000\n")), UnsupportedFormatError);
    CHECK_THROWS_AS(read_pgm(tmp.raw("short.pgm", "P2\n2 2\n255\n1 2 3\n")), ParseError);
    CHECK_THROWS_AS(read_pgm(tmp.raw("over.pgm", "P2\n1 1\n100\n101\n")), ParseError);
    CHECK_THROWS_AS(read_pgm(tmp.raw("shortraster.pgm", std::string("P5\n2 2\n255\n") +
                                                            std::string(3, '\x01'))),
                    ParseError);
    const std::string overbyte =
        tmp.raw("overbyte.pgm", std::string("P5\n1 1\n100\n") + std::string(1, '\xc8'));
    CHECK_THROWS_AS(read_pgm(overbyte), ParseError);
    CHECK_THROWS_AS(read_pgm(tmp.path("absent.pgm")), ParseError);

    PgmImage mismatched;
    mismatched.width = 2;
    mismatched.height = 2;
    mismatched.pixels = {1, 2, 3};
    CHECK_THROWS_AS(write_pgm(tmp.path("mismatch.pgm"), mismatched), ParseError);
}

TEST_CASE("auto normalization leaves in-range data untouched") {
    std::vector<double> values = {0.0, 0.25, 1.0};
    const std::vector<double> original = values;
    Normalization norm = normalize_signal(values, "auto");
    CHECK_FALSE(norm.applied);
    CHECK(values == original);        // bit-identical
    CHECK(norm.apply(0.3) == 0.3);    // identity
    CHECK(norm.invert(0.3) == 0.3);
}

TEST_CASE("auto normalization rescales out-of-range data by min and max") {
    std::vector<double> values = {0.0, 5.0, 10.0};
    Normalization norm = normalize_signal(values, "auto");
    CHECK(norm.applied);
    CHECK(norm.min == 0.0);
    CHECK(norm.max == 10.0);
    CHECK(values == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(norm.invert(0.5) == 5.0);
}

TEST_CASE("always-normalization rescales even in-range data") {
    std::vector<double> values = {0.2, 0.6};
    Normalization norm = normalize_signal(values, "always");
    CHECK(norm.applied);
    CHECK(norm.min == 0.2);
    CHECK(norm.max == 0.6);
    CHECK(values == std::vector<double>{0.0, 1.0});
    CHECK(norm.apply(0.4) == doctest::Approx(0.5));
}

TEST_CASE("never-normalization passes clean data and rejects the rest") {
    std::vector<double> fine = {0.0, 1.0};
    Normalization norm = normalize_signal(fine, "never");
    CHECK_FALSE(norm.applied);

    std::vector<double> outside = {0.0, 1.5};
    CHECK_THROWS_AS(normalize_signal(outside, "never"), ParseError);
    std::vector<double> below = {-0.5, 0.5};
    CHECK_THROWS_AS(normalize_signal(below, "never"), ParseError);
}

TEST_CASE("constant signals normalize to zeros and invert to the constant") {
    std::vector<double> values = {3.0, 3.0, 3.0};
    Normalization norm = normalize_signal(values, "auto");
    CHECK(norm.applied);
    CHECK(norm.degenerate);
    CHECK(values == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(norm.invert(0.0) == 3.0);
    CHECK(norm.invert(0.7) == 3.0);

    std::vector<double> in_range_constant = {0.4, 0.4};
    Normalization always = normalize_signal(in_range_constant, "always");
    CHECK(always.degenerate);
    CHECK(in_range_constant == std::vector<double>{0.0, 0.0});
}

TEST_CASE("unknown normalization modes and empty signals") {
    std::vector<double> values = {0.5};
    CHECK_THROWS_AS(normalize_signal(values, "sometimes"), ParseError);
    std::vector<double> empty;
    Normalization norm = normalize_signal(empty, "auto");
    CHECK_FALSE(norm.applied);
}

TEST_CASE("gray levels map onto the unit carrier by maxval") {
    PgmImage img;
    img.width = 5;
    img.height = 1;
    img.maxval = 4;
    img.pixels = {0, 1, 2, 3, 4};
    CHECK(pgm_to_unit(img) == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
}

TEST_CASE("unit values requantize by rounding half-up with clamping") {
    PgmImage like;
    like.width = 6;
    like.height = 1;
    like.maxval = 255;
    PgmImage out = unit_to_pgm({0.5, 1.0, 0.0, 1.2, -0.1, 127.4 / 255.0}, like);
    CHECK(out.pixels == std::vector<int>{128, 255, 0, 255, 0, 127});
    CHECK(out.maxval == like.maxval);
    CHECK(out.width == like.width);

    CHECK_THROWS_AS(unit_to_pgm({0.5}, like), ParseError); // wrong sample count
}

TEST_CASE("quantize-dequantize is the identity on every gray level") {
    PgmImage img;
    img.width = 256;
    img.height = 1;
    img.maxval = 255;
    for (int v = 0; v < 256; ++v) img.pixels.push_back(v);
    PgmImage back = unit_to_pgm(pgm_to_unit(img), img);
    CHECK(back.pixels == img.pixels);

    PgmImage deep;
    deep.width = 3;
    deep.height = 1;
    deep.maxval = 65535;
    deep.pixels = {0, 40000, 65535};
    PgmImage deep_back = unit_to_pgm(pgm_to_unit(deep), deep);
    CHECK(deep_back.pixels == deep.pixels);
}
