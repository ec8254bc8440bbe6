#include "firerisk/ascii_grid.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

namespace firerisk {

namespace {

struct LineScanner {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;  // 1-based after first next()

    // Returns the next line without the trailing newline (and tolerating
    // CRLF); false at end of input.
    bool next(std::string_view& line) {
        if (pos >= text.size()) return false;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = end + 1;
        ++line_no;
        return true;
    }
};

bool is_space(char c) { return c == ' ' || c == '\t'; }

bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return is_space(c); });
}

// Parses one double token; reports the 1-based character column on failure.
double parse_real(std::string_view token, const std::string& path, int line, int column) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw ParseError(path, line, column,
                         "expected a number, got '" + std::string(token) + "'");
    if (!std::isfinite(v))
        throw ParseError(path, line, column,
                         "non-finite value '" + std::string(token) + "'");
    return v;
}

struct HeaderField {
    const char* keyword;
    double value;
};

// Header line: keyword + single value. Keyword match is case-insensitive.
double parse_header_line(LineScanner& sc, const std::string& path, const char* keyword) {
    std::string_view line;
    do {
        if (!sc.next(line))
            throw ParseError(path, sc.line_no + 1, 0,
                             std::string("missing header line ") + keyword);
    } while (is_blank(line));

    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t key_start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    std::string_view key = line.substr(key_start, i - key_start);

    auto eq_nocase = [](std::string_view a, std::string_view b) {
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (std::toupper(static_cast<unsigned char>(a[k])) !=
                std::toupper(static_cast<unsigned char>(b[k])))
                return false;
        return true;
    };
    if (!eq_nocase(key, keyword))
        throw ParseError(path, sc.line_no, static_cast<int>(key_start) + 1,
                         std::string("expected header keyword ") + keyword + ", got '" +
                             std::string(key) + "'");

    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t val_start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    std::string_view val = line.substr(val_start, i - val_start);
    if (val.empty())
        throw ParseError(path, sc.line_no, static_cast<int>(val_start) + 1,
                         std::string("missing value after ") + keyword);
    while (i < line.size() && is_space(line[i])) ++i;
    if (i != line.size())
        throw ParseError(path, sc.line_no, static_cast<int>(i) + 1,
                         std::string("trailing content after ") + keyword + " value");

    return parse_real(val, path, sc.line_no, static_cast<int>(val_start) + 1);
}

int as_positive_int(double v, const std::string& path, int line, const char* keyword) {
    if (v < 1 || v != std::floor(v) || v > 1e9)
        throw ParseError(path, line, 0,
                         std::string(keyword) + " must be a positive integer");
    return static_cast<int>(v);
}

void format_cell(std::string& out, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 10);
    out.append(buf, ptr);
}

void format_exact(std::string& out, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr);
}

}  // namespace

RasterGrid read_ascii_grid(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << file.rdbuf();
    const std::string content = buf.str();

    LineScanner sc{content};
    const double cols_raw = parse_header_line(sc, path, "NCOLS");
    const int n_cols = as_positive_int(cols_raw, path, sc.line_no, "NCOLS");
    const double rows_raw = parse_header_line(sc, path, "NROWS");
    const int n_rows = as_positive_int(rows_raw, path, sc.line_no, "NROWS");
    const double x_origin = parse_header_line(sc, path, "XLLCORNER");
    const double y_origin = parse_header_line(sc, path, "YLLCORNER");
    const double cell_size = parse_header_line(sc, path, "CELLSIZE");
    if (!(cell_size > 0.0))
        throw ParseError(path, sc.line_no, 0, "CELLSIZE must be positive");
    const double nodata = parse_header_line(sc, path, "NODATA_VALUE");

    RasterGrid grid(GridGeometry{n_cols, n_rows, x_origin, y_origin, cell_size});
    double* values = grid.raw_values();
    std::uint8_t* validity = grid.raw_validity();

    int row = 0;
    std::string_view line;
    while (sc.next(line)) {
        if (is_blank(line)) continue;
        if (row >= n_rows)
            throw ParseError(path, sc.line_no, 0,
                             "more than NROWS=" + std::to_string(n_rows) +
                                 " rows of data");
        std::size_t i = 0;
        int col = 0;
        while (i < line.size()) {
            while (i < line.size() && is_space(line[i])) ++i;
            if (i >= line.size()) break;
            const std::size_t tok_start = i;
            while (i < line.size() && !is_space(line[i])) ++i;
            if (col >= n_cols)
                throw ParseError(path, sc.line_no, static_cast<int>(tok_start) + 1,
                                 "row has more than NCOLS=" + std::to_string(n_cols) +
                                     " values");
            const double v = parse_real(line.substr(tok_start, i - tok_start), path,
                                        sc.line_no, static_cast<int>(tok_start) + 1);
            const std::size_t idx = grid.index(row, col);
            if (v == nodata) {
                validity[idx] = 0;
            } else {
                values[idx] = v;
                validity[idx] = 1;
            }
            ++col;
        }
        if (col != n_cols)
            throw ParseError(path, sc.line_no, 0,
                             "row has " + std::to_string(col) + " values, expected NCOLS=" +
                                 std::to_string(n_cols));
        ++row;
    }
    if (row != n_rows)
        throw ParseError(path, sc.line_no, 0,
                         "found " + std::to_string(row) + " rows of data, expected NROWS=" +
                             std::to_string(n_rows));
    return grid;
}

void write_ascii_grid(const RasterGrid& grid, const std::string& path) {
    const GridGeometry& g = grid.geometry();
    std::span<const double> values = grid.values();
    std::span<const std::uint8_t> validity = grid.validity();

    // Sentinel must not collide with any valid cell at the emitted 10-digit
    // precision, or the file would not re-parse to the same grid. Distinct
    // doubles can share a token, so the check compares formatted tokens.
    double nodata = -9999.0;
    static constexpr std::array<double, 4> kCandidates = {-9999.0, -32768.0, -1e10,
                                                          -9.87654321e297};
    for (double cand : kCandidates) {
        nodata = cand;
        std::string cand_token;
        format_cell(cand_token, cand);
        const double near = std::abs(cand) * 1e-9;
        bool clash = false;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!validity[i] || std::abs(values[i] - cand) > near) continue;
            std::string token;
            format_cell(token, values[i]);
            if (token == cand_token) {
                clash = true;
                break;
            }
        }
        if (!clash) break;
    }

    std::string out;
    out.reserve(values.size() * 12 + 128);
    out += "NCOLS " + std::to_string(g.n_cols) + "\n";
    out += "NROWS " + std::to_string(g.n_rows) + "\n";
    out += "XLLCORNER ";
    format_exact(out, g.x_origin);
    out += "\nYLLCORNER ";
    format_exact(out, g.y_origin);
    out += "\nCELLSIZE ";
    format_exact(out, g.cell_size);
    out += "\nNODATA_VALUE ";
    format_cell(out, nodata);
    out += "\n";

    for (int r = 0; r < g.n_rows; ++r) {
        for (int c = 0; c < g.n_cols; ++c) {
            if (c > 0) out += ' ';
            const std::size_t i = grid.index(r, c);
            format_cell(out, validity[i] ? values[i] : nodata);
        }
        out += '\n';
    }

    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace firerisk
