#ifndef GMSET_IO_HPP
#define GMSET_IO_HPP

/**
 * @file io.hpp
 * @brief CSV ingestion and export, PGM heatmaps.
 *
 * Numbers are written with 17 significant digits via std::to_chars and read
 * with std::from_chars, so output is locale-independent and every printed
 * binary64 value parses back to the same bits.
 */

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include "fields.hpp"
#include "signal.hpp"
#include "sliding.hpp"

namespace gmset::io {

/// Malformed or unreadable input data.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline std::string_view trim(std::string_view s)
{
    const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && ws(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && ws(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

/// Strict decimal parse of the whole (trimmed) cell; nullopt on anything else.
inline std::optional<double> parse_double(std::string_view cell)
{
    cell = trim(cell);
    if (!cell.empty() && cell.front() == '+') {
        cell.remove_prefix(1);
    }
    if (cell.empty()) {
        return std::nullopt;
    }
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

inline std::vector<std::string_view> split_row(std::string_view line)
{
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

/// A column by header name or by 0-based position.
class ColumnSelector {
public:
    static ColumnSelector by_name(std::string name) { return ColumnSelector(std::move(name)); }
    static ColumnSelector by_index(std::size_t index) { return ColumnSelector(index); }

    /// Header names win; a bare non-negative integer falls back to a position.
    static ColumnSelector parse(std::string_view text) { return ColumnSelector(std::string(trim(text))); }

    std::size_t resolve(const std::vector<std::string>* header, std::size_t width) const
    {
        if (const auto* idx = std::get_if<std::size_t>(&sel_)) {
            if (*idx >= width) {
                throw DataError("column index " + std::to_string(*idx) + " out of range");
            }
            return *idx;
        }
        const std::string& name = std::get<std::string>(sel_);
        if (header) {
            const auto it = std::find(header->begin(), header->end(), name);
            if (it != header->end()) {
                return static_cast<std::size_t>(it - header->begin());
            }
        }
        std::size_t idx = 0;
        const auto res = std::from_chars(name.data(), name.data() + name.size(), idx);
        if (!name.empty() && res.ec == std::errc() && res.ptr == name.data() + name.size() && idx < width) {
            return idx;
        }
        throw DataError("cannot resolve column '" + name + "'");
    }

private:
    explicit ColumnSelector(std::string name) : sel_(std::move(name)) {}
    explicit ColumnSelector(std::size_t index) : sel_(index) {}

    std::variant<std::string, std::size_t> sel_;
};

/// Raw table: optional header and rows of cell text.
struct CsvTable {
    std::vector<std::string> header;
    bool has_header = false;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers; ///< 1-based file line of each row
};

inline CsvTable parse_csv(std::istream& in, bool has_header, const std::string& source = "input")
{
    CsvTable table;
    table.has_header = has_header;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        auto cells = split_row(line);
        if (first) {
            width = cells.size();
            first = false;
            if (has_header) {
                table.header.assign(cells.begin(), cells.end());
                continue;
            }
        } else if (cells.size() != width) {
            throw DataError(source + ": line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                            " fields, found " + std::to_string(cells.size()));
        }
        table.rows.emplace_back(cells.begin(), cells.end());
        table.line_numbers.push_back(line_no);
    }
    if (first) {
        throw DataError(source + ": empty file");
    }
    return table;
}

/**
 * Reads the selected columns as signals with spacing `dx`. Every selected
 * cell must be a decimal real; failures name the file line.
 */
inline std::vector<Signal> read_csv(const std::string& path, const std::vector<ColumnSelector>& selectors,
                                    bool has_header = true, double dx = 1.0)
{
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path + "'");
    }
    const CsvTable table = parse_csv(in, has_header, path);
    const std::size_t width = has_header ? table.header.size() : (table.rows.empty() ? 0 : table.rows[0].size());
    if (table.rows.empty()) {
        throw DataError(path + ": no data rows");
    }

    std::vector<Signal> out;
    for (const auto& sel : selectors) {
        const std::size_t col = sel.resolve(has_header ? &table.header : nullptr, width);
        std::vector<double> values;
        values.reserve(table.rows.size());
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            const auto v = parse_double(table.rows[r][col]);
            if (!v) {
                throw DataError(path + ": line " + std::to_string(table.line_numbers[r]) + ": cannot parse '" +
                                table.rows[r][col] + "' as a number");
            }
            values.push_back(*v);
        }
        try {
            out.emplace_back(std::move(values), dx);
        } catch (const std::invalid_argument& e) {
            throw DataError(path + ": " + e.what());
        }
    }
    return out;
}

/// "x,y,value" header then one line per cell in row-major order.
inline void write_field_csv(const ScalarField& f, std::ostream& out)
{
    out << "x,y,value\n";
    for (std::size_t j = 0; j < f.spec.ny; ++j) {
        const std::string y = format_double(f.spec.y_at(j));
        for (std::size_t i = 0; i < f.spec.nx; ++i) {
            out << format_double(f.spec.x_at(i)) << ',' << y << ',' << format_double(f.at(i, j)) << '\n';
        }
    }
}

inline void write_field_csv(const ScalarField& f, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write '" + path + "'");
    }
    write_field_csv(f, out);
    if (!out) {
        throw DataError("write failed for '" + path + "'");
    }
}

/// A point of a field CSV.
struct FieldSample {
    double x;
    double y;
    double value;
};

inline std::vector<FieldSample> read_field_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path + "'");
    }
    const CsvTable table = parse_csv(in, true, path);
    if (table.header != std::vector<std::string>{"x", "y", "value"}) {
        throw DataError(path + ": expected header x,y,value");
    }
    std::vector<FieldSample> out;
    out.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        double v[3];
        for (int c = 0; c < 3; ++c) {
            const auto p = parse_double(table.rows[r][c]);
            if (!p) {
                throw DataError(path + ": line " + std::to_string(table.line_numbers[r]) + ": bad number");
            }
            v[c] = *p;
        }
        out.push_back({v[0], v[1], v[2]});
    }
    return out;
}

struct HeatmapRange {
    double lo = -1.0;
    double hi = 1.0;

    void validate() const
    {
        if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
            throw std::invalid_argument("heatmap range: need finite lo < hi");
        }
    }

    /// [-1, 1] for bounded expressions, otherwise the field's own extent.
    static HeatmapRange default_for(FieldExpr expr, const ScalarField& f)
    {
        if (is_bounded(expr)) {
            return {};
        }
        const auto [mn, mx] = std::minmax_element(f.values.begin(), f.values.end());
        if (!(*mn < *mx)) {
            return {*mn, *mn + 1.0};
        }
        return {*mn, *mx};
    }
};

inline std::uint8_t to_gray(double v, const HeatmapRange& range)
{
    const double t = std::clamp((v - range.lo) / (range.hi - range.lo), 0.0, 1.0);
    return static_cast<std::uint8_t>(std::round(255.0 * t));
}

/// Binary P5, maxval 255; the first image row is the y_max row.
inline void write_pgm(const ScalarField& f, const HeatmapRange& range, std::ostream& out)
{
    range.validate();
    out << "P5\n" << f.spec.nx << ' ' << f.spec.ny << "\n255\n";
    std::vector<char> row(f.spec.nx);
    for (std::size_t jj = 0; jj < f.spec.ny; ++jj) {
        const std::size_t j = f.spec.ny - 1 - jj;
        for (std::size_t i = 0; i < f.spec.nx; ++i) {
            row[i] = static_cast<char>(to_gray(f.at(i, j), range));
        }
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

inline void write_pgm(const ScalarField& f, const HeatmapRange& range, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write '" + path + "'");
    }
    write_pgm(f, range, out);
    if (!out) {
        throw DataError("write failed for '" + path + "'");
    }
}

/// "lag,score" then one line per lag.
inline void write_profile_csv(const MatchProfile& p, std::ostream& out)
{
    out << "lag,score\n";
    for (std::size_t k = 0; k < p.lags.size(); ++k) {
        out << p.lags[k] << ',' << format_double(p.scores[k]) << '\n';
    }
}

} // namespace gmset::io

#endif // GMSET_IO_HPP
