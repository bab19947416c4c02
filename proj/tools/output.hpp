#pragma once

// Tabular and single-record output in CSV or JSON.

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

namespace lis::cli {

using Cell = std::variant<std::monostate, long long, double, std::string, bool>;

inline std::string format_double(double v, int digits) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

/// Round to `digits` significant digits so that JSON prints no more than that.
inline double round_digits(double v, int digits) {
    if (!std::isfinite(v)) return v;
    return std::stod(format_double(v, digits));
}

inline nlohmann::ordered_json to_json(const Cell& c, int digits) {
    return std::visit(
        [digits](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return nullptr;
            else if constexpr (std::is_same_v<T, double>)
                return std::isfinite(v) ? nlohmann::ordered_json(round_digits(v, digits)) : nlohmann::ordered_json(nullptr);
            else
                return v;
        },
        c);
}

inline std::string to_csv(const Cell& c, int digits) {
    return std::visit(
        [digits](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return "";
            else if constexpr (std::is_same_v<T, double>)
                return format_double(v, digits);
            else if constexpr (std::is_same_v<T, bool>)
                return v ? "true" : "false";
            else if constexpr (std::is_same_v<T, long long>)
                return std::to_string(v);
            else
                return v;
        },
        c);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }

    void write(std::ostream& os, const std::string& format, int digits) const {
        if (format == "json") {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& r : rows) {
                nlohmann::ordered_json o = nlohmann::ordered_json::object();
                for (std::size_t i = 0; i < columns.size(); ++i) o[columns[i]] = to_json(r[i], digits);
                arr.push_back(std::move(o));
            }
            os << arr.dump(2) << "\n";
            return;
        }
        for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
        os << "\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << to_csv(r[i], digits);
            os << "\n";
        }
    }
};

/// A single flat record; CSV renders it as a one-row table.
struct Record {
    std::vector<std::pair<std::string, Cell>> fields;

    Record& operator()(std::string key, Cell v) {
        fields.emplace_back(std::move(key), std::move(v));
        return *this;
    }

    void write(std::ostream& os, const std::string& format, int digits) const {
        if (format == "json") {
            nlohmann::ordered_json o = nlohmann::ordered_json::object();
            for (const auto& [k, v] : fields) o[k] = to_json(v, digits);
            os << o.dump(2) << "\n";
            return;
        }
        Table t;
        std::vector<Cell> row;
        for (const auto& [k, v] : fields) {
            t.columns.push_back(k);
            row.push_back(v);
        }
        t.add(std::move(row));
        t.write(os, "csv", digits);
    }
};

}  // namespace lis::cli
