#pragma once
// Reading and writing signals (CSV, one real per line) and grayscale images
// (PGM, ASCII P2 or binary P5), plus the min-max normalization used to map
// raw data onto the unit-interval carrier.

#include <cstddef>
#include <string>
#include <vector>

namespace lft {

// One finite real per line; blank lines are skipped. Throws ParseError with
// the offending 1-based line number in the message.
std::vector<double> read_csv_signal(const std::string& path);
void write_csv_signal(const std::string& path, const std::vector<double>& values);

struct PgmImage {
    std::size_t width = 0;
    std::size_t height = 0;
    int maxval = 255;
    bool binary = false;      // written as P5 when true, P2 otherwise
    std::vector<int> pixels;  // row-major, height*width entries in [0, maxval]
};

// Throws UnsupportedFormatError for non-PGM input and ParseError for
// malformed headers or truncated data.
PgmImage read_pgm(const std::string& path);
void write_pgm(const std::string& path, const PgmImage& img);

// Min-max rescaling onto [0,1]. Degenerate (constant) inputs map to all
// zeros; `invert` then restores the constant.
struct Normalization {
    bool applied = false;
    bool degenerate = false;
    double min = 0.0;
    double max = 1.0;

    double apply(double v) const;
    double invert(double u) const;
};

// Rescales `values` in place. mode "auto" rescales only when some value
// falls outside [0,1]; "always" rescales unconditionally; "never" requires
// the values to already lie within [0,1].
Normalization normalize_signal(std::vector<double>& values, const std::string& mode);

// Gray levels to [0,1]: u = value / maxval.
std::vector<double> pgm_to_unit(const PgmImage& img);

// [0,1] back to gray levels by rounding half-up, with `like` supplying the
// geometry, maxval, and P2/P5 flavor.
PgmImage unit_to_pgm(const std::vector<double>& values, const PgmImage& like);

} // namespace lft
