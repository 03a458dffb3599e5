#include "lft/signal_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>

#include "lft/errors.hpp"
#include "lft/lattice.hpp"

namespace lft {
namespace {

std::string trimmed(const std::string& line) {
    std::size_t begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    std::size_t end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

// Reads one PGM header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
    std::string token;
    int ch = in.get();
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = in.get();
        } else if (std::isspace(ch)) {
            ch = in.get();
        } else {
            break;
        }
    }
    while (ch != EOF && !std::isspace(ch) && ch != '#') {
        token += static_cast<char>(ch);
        ch = in.get();
    }
    if (ch == '#') in.unget();
    return token;
}

long parse_header_int(std::istream& in, const std::string& path, const char* what) {
    const std::string token = next_token(in);
    if (token.empty())
        throw ParseError(path + ": unexpected end of file while reading the " +
                         std::string(what));
    try {
        std::size_t used = 0;
        const long value = std::stol(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError(path + ": '" + token + "' is not a valid " + std::string(what));
    }
}

} // namespace

std::vector<double> read_csv_signal(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trimmed(line);
        if (text.empty()) continue;
        try {
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size() || !std::isfinite(v))
                throw std::invalid_argument(text);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(path + ": line " + std::to_string(lineno) + ": '" + text +
                             "' is not a finite real");
        }
    }
    if (values.empty()) throw ParseError(path + ": no samples found");
    return values;
}

void write_csv_signal(const std::string& path, const std::vector<double>& values) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    for (double v : values) out << format_real(v) << '\n';
    if (!out) throw ParseError(path + ": write failed");
}

PgmImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    const std::string magic = next_token(in);
    if (magic != "P2" && magic != "P5")
        throw UnsupportedFormatError(path + ": expected a P2 or P5 grayscale image, got '" +
                                     magic + "'");
    PgmImage img;
    img.binary = (magic == "P5");
    const long width = parse_header_int(in, path, "width");
    const long height = parse_header_int(in, path, "height");
    const long maxval = parse_header_int(in, path, "maxval");
    if (width <= 0 || height <= 0)
        throw ParseError(path + ": image dimensions must be positive");
    if (maxval < 1 || maxval > 65535)
        throw ParseError(path + ": maxval must lie in [1, 65535]");
    if (img.binary && maxval > 255)
        throw UnsupportedFormatError(path + ": binary images with 16-bit samples are not "
                                            "supported");
    img.width = static_cast<std::size_t>(width);
    img.height = static_cast<std::size_t>(height);
    img.maxval = static_cast<int>(maxval);
    const std::size_t count = img.width * img.height;
    img.pixels.reserve(count);
    if (img.binary) {
        // Exactly one whitespace byte separates the header from the raster.
        std::string raster(count, '\0');
        in.read(raster.data(), static_cast<std::streamsize>(count));
        if (static_cast<std::size_t>(in.gcount()) != count)
            throw ParseError(path + ": truncated raster data");
        for (std::size_t i = 0; i < count; ++i) {
            const int v = static_cast<unsigned char>(raster[i]);
            if (v > img.maxval)
                throw ParseError(path + ": sample " + std::to_string(v) +
                                 " exceeds maxval " + std::to_string(img.maxval));
            img.pixels.push_back(v);
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const long v = parse_header_int(in, path, "sample");
            if (v < 0 || v > maxval)
                throw ParseError(path + ": sample " + std::to_string(v) +
                                 " is outside [0, " + std::to_string(maxval) + "]");
            img.pixels.push_back(static_cast<int>(v));
        }
    }
    return img;
}

void write_pgm(const std::string& path, const PgmImage& img) {
    if (img.pixels.size() != img.width * img.height)
        throw ParseError(path + ": pixel count does not match the image dimensions");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    out << (img.binary ? "P5" : "P2") << '\n'
        << img.width << ' ' << img.height << '\n'
        << img.maxval << '\n';
    if (img.binary) {
        std::string raster;
        raster.reserve(img.pixels.size());
        for (int v : img.pixels) raster += static_cast<char>(static_cast<unsigned char>(v));
        out.write(raster.data(), static_cast<std::streamsize>(raster.size()));
    } else {
        for (std::size_t y = 0; y < img.height; ++y) {
            for (std::size_t x = 0; x < img.width; ++x) {
                if (x) out << ' ';
                out << img.pixels[y * img.width + x];
            }
            out << '\n';
        }
    }
    if (!out) throw ParseError(path + ": write failed");
}

double Normalization::apply(double v) const {
    if (!applied) return v;
    if (degenerate) return 0.0;
    return (v - min) / (max - min);
}

double Normalization::invert(double u) const {
    if (!applied) return u;
    if (degenerate) return min;
    return min + u * (max - min);
}

Normalization normalize_signal(std::vector<double>& values, const std::string& mode) {
    if (mode != "auto" && mode != "always" && mode != "never")
        throw ParseError("normalization mode must be auto, always, or never");
    Normalization norm;
    if (values.empty()) return norm;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const bool in_range = *lo >= 0.0 && *hi <= 1.0;
    if (mode == "never") {
        if (!in_range)
            throw ParseError("signal value " + format_real(*lo >= 0.0 ? *hi : *lo) +
                             " lies outside [0,1] and normalization is disabled");
        return norm;
    }
    if (mode == "auto" && in_range) return norm;
    norm.applied = true;
    norm.min = *lo;
    norm.max = *hi;
    if (*lo == *hi) {
        norm.degenerate = true;
        std::fill(values.begin(), values.end(), 0.0);
        return norm;
    }
    for (double& v : values) v = (v - norm.min) / (norm.max - norm.min);
    return norm;
}

std::vector<double> pgm_to_unit(const PgmImage& img) {
    std::vector<double> out;
    out.reserve(img.pixels.size());
    for (int v : img.pixels)
        out.push_back(static_cast<double>(v) / static_cast<double>(img.maxval));
    return out;
}

PgmImage unit_to_pgm(const std::vector<double>& values, const PgmImage& like) {
    if (values.size() != like.width * like.height)
        throw ParseError("sample count does not match the image dimensions");
    PgmImage img;
    img.width = like.width;
    img.height = like.height;
    img.maxval = like.maxval;
    img.binary = like.binary;
    img.pixels.reserve(values.size());
    for (double u : values) {
        const long level = static_cast<long>(
            std::floor(u * static_cast<double>(like.maxval) + 0.5));
        img.pixels.push_back(
            static_cast<int>(std::clamp(level, 0L, static_cast<long>(like.maxval))));
    }
    return img;
}

} // namespace lft
