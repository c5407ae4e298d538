#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tpo::cli {

enum class Format { csv, json };

Format parse_format(const std::string& s);

/// Round-trip decimal (17 significant digits).
std::string format_double(double v);

/// A table cell: number, integer, text, or missing (written as NA / null).
using Cell = std::variant<std::monostate, double, long long, std::string>;

inline Cell na() { return std::monostate{}; }
inline Cell cell(std::optional<double> v) { return v ? Cell(*v) : na(); }

/// Ordered key/value header block followed by a column table.
struct Table {
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_config(std::string key, std::string value) { config.emplace_back(std::move(key), std::move(value)); }
    void add_config(std::string key, double value) { add_config(std::move(key), format_double(value)); }
    void add_summary(std::string key, std::string value) { summary.emplace_back(std::move(key), std::move(value)); }
    void add_summary(std::string key, double value) { add_summary(std::move(key), format_double(value)); }
};

/// CSV: '#'-prefixed header block, header row, RFC 4180 quoting.
void write_csv(std::ostream& os, const Table& t);

/// JSON: {"config": {...}, "summary": {...}, "columns": [...], "data": {name: [...]}}.
void write_json(std::ostream& os, const Table& t);

void write_table(std::ostream& os, const Table& t, Format f);

/// Writes to `path`, or to stdout when path is empty or "-".
void write_table(const std::string& path, const Table& t, Format f);

} // namespace tpo::cli
