#include "table.hpp"

#include <tpo/model.hpp>

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace tpo::cli {

Format parse_format(const std::string& s)
{
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw domain_error("unknown format '" + s + "' (expected csv or json)");
}

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell& c)
{
    struct Visitor {
        std::string operator()(std::monostate) const { return "NA"; }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, c);
}

nlohmann::ordered_json cell_json(const Cell& c)
{
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(double v) const
        {
            if (!std::isfinite(v)) return format_double(v);
            return v;
        }
        nlohmann::ordered_json operator()(long long v) const { return v; }
        nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, c);
}

} // namespace

void write_csv(std::ostream& os, const Table& t)
{
    for (const auto& [k, v] : t.config) os << "# " << k << " = " << v << '\n';
    for (const auto& [k, v] : t.summary) os << "# " << k << " = " << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t)
{
    nlohmann::ordered_json j;
    j["config"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.config) j["config"][k] = v;
    j["summary"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.summary) j["summary"][k] = v;
    j["columns"] = t.columns;
    auto& data = j["data"] = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) arr.push_back(c < row.size() ? cell_json(row[c]) : nullptr);
        data[t.columns[c]] = std::move(arr);
    }
    os << j.dump(2) << '\n';
}

void write_table(std::ostream& os, const Table& t, Format f)
{
    if (f == Format::csv) {
        write_csv(os, t);
    } else {
        write_json(os, t);
    }
}

void write_table(const std::string& path, const Table& t, Format f)
{
    if (path.empty() || path == "-") {
        write_table(std::cout, t, f);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    write_table(out, t, f);
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

} // namespace tpo::cli
