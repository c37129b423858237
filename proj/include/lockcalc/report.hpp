#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace lockcalc {

/// Fixed-point rendering with a set number of decimals.
struct Fixed {
    double value = 0.0;
    int decimals = 2;
};

using Cell = std::variant<std::string, double, std::int64_t, Fixed>;

/// Shortest round-trip text for doubles, plain digits for integers.
std::string format_cell(const Cell& cell);

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// One labelled figure with its unit and where the number comes from.
struct ReportRow {
    std::string label;
    Cell value;
    std::string unit;
    std::string provenance;  // "computed", "assumption", or the published figure
};

inline const std::string kComputed = "computed";
inline const std::string kAssumption = "assumption";

/// Columns quantity,value,unit,gbp_billions,provenance. Monetary rows (unit
/// "GBP") are written in whole pounds with a billions column to 2 decimals.
Table key_value_table(std::string title, const std::vector<ReportRow>& rows);

/// RFC-4180-style CSV: header row, ',' separator, '.' decimals, '\n' endings.
std::string render_csv(const Table& t);

/// Space-aligned plain text with the title on top.
std::string render_text(const Table& t);

/// Static line chart: column `x_column` gives category labels, every column in
/// `y_columns` becomes a series. Non-numeric cells are skipped.
std::string render_svg(const Table& t, std::size_t x_column, const std::vector<std::size_t>& y_columns,
                       const std::string& y_label);

}  // namespace lockcalc
