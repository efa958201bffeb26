// table.hpp: Column-oriented result table and its CSV form.
//
// CSV: one header row, then one row per sample; every number is written in
// scientific notation with 12 significant digits; LF line endings.

#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wipe {

class TableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ResultTable {
    std::vector<std::string> headers;
    std::vector<std::vector<double>> columns;  // columns[0] is the abscissa

    std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
    std::size_t cols() const { return columns.size(); }

    void add_column(std::string header, std::vector<double> values) {
        if (!columns.empty() && values.size() != rows())
            throw TableError("column '" + header + "' has " + std::to_string(values.size()) +
                             " rows, table has " + std::to_string(rows()));
        headers.push_back(std::move(header));
        columns.push_back(std::move(values));
    }

    const std::vector<double>& column(std::string_view header) const {
        for (std::size_t k = 0; k < headers.size(); ++k)
            if (headers[k] == header) return columns[k];
        throw TableError("no column named '" + std::string(header) + "'");
    }

    /// Rectangular, and the abscissa strictly increases.
    void validate() const {
        if (headers.size() != columns.size()) throw TableError("header/column count mismatch");
        for (const auto& c : columns)
            if (c.size() != rows()) throw TableError("table is not rectangular");
        if (!columns.empty())
            for (std::size_t i = 1; i < rows(); ++i)
                if (!(columns[0][i] > columns[0][i - 1]))
                    throw TableError("first column is not strictly increasing at row " +
                                     std::to_string(i));
    }
};

namespace csv {

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

/// Value as it survives a write/read cycle.
inline double round_trip(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

inline std::string write(const ResultTable& table) {
    table.validate();
    std::string out;
    for (std::size_t k = 0; k < table.headers.size(); ++k) {
        if (table.headers[k].find_first_of(",\n\r") != std::string::npos)
            throw TableError("header '" + table.headers[k] + "' contains a separator");
        if (k) out += ',';
        out += table.headers[k];
    }
    out += '\n';
    for (std::size_t i = 0; i < table.rows(); ++i) {
        for (std::size_t k = 0; k < table.cols(); ++k) {
            if (k) out += ',';
            out += format_number(table.columns[k][i]);
        }
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace detail

inline ResultTable read(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw TableError("csv: empty input");
    ResultTable table;
    table.headers = detail::split(line);
    table.columns.assign(table.headers.size(), {});
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = detail::split(line);
        if (fields.size() != table.headers.size())
            throw TableError("csv: line " + std::to_string(lineno) + " has " +
                             std::to_string(fields.size()) + " fields");
        for (std::size_t k = 0; k < fields.size(); ++k) {
            char* end = nullptr;
            const double v = std::strtod(fields[k].c_str(), &end);
            if (end == fields[k].c_str() || *end != '\0')
                throw TableError("csv: bad number '" + fields[k] + "' on line " +
                                 std::to_string(lineno));
            table.columns[k].push_back(v);
        }
    }
    return table;
}

inline void write_file(const ResultTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw TableError("cannot open '" + path + "' for writing");
    out << write(table);
    if (!out) throw TableError("failed writing '" + path + "'");
}

}  // namespace csv
}  // namespace wipe
