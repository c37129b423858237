#include "lockcalc/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <fmt/format.h>

namespace lockcalc {

std::string format_cell(const Cell& cell) {
    struct Visitor {
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(double d) const { return fmt::format("{}", d); }
        std::string operator()(std::int64_t i) const { return fmt::format("{}", i); }
        std::string operator()(const Fixed& f) const { return fmt::format("{:.{}f}", f.value, f.decimals); }
    };
    return std::visit(Visitor{}, cell);
}

Table key_value_table(std::string title, const std::vector<ReportRow>& rows) {
    Table t;
    t.title = std::move(title);
    t.columns = {"quantity", "value", "unit", "gbp_billions", "provenance"};
    for (const auto& r : rows) {
        Cell value = r.value;
        std::string billions;
        if (r.unit == "GBP") {
            const double* d = std::get_if<double>(&r.value);
            if (d) {
                value = static_cast<std::int64_t>(std::llround(*d));
                billions = fmt::format("{:.2f}", *d / 1e9);
            }
        }
        t.rows.push_back({r.label, value, r.unit, billions, r.provenance});
    }
    return t;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::optional<double> numeric(const Cell& c) {
    if (auto d = std::get_if<double>(&c)) return *d;
    if (auto i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
    if (auto f = std::get_if<Fixed>(&c)) return f->value;
    return std::nullopt;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(format_cell(row[i]));
        }
        out += '\n';
    }
    return out;
}

std::string render_text(const Table& t) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back(t.columns);
    for (const auto& row : t.rows) {
        std::vector<std::string> r;
        for (const auto& c : row) r.push_back(format_cell(c));
        cells.push_back(std::move(r));
    }
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (const auto& r : cells)
        for (std::size_t i = 0; i < r.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], r[i].size());

    std::string out;
    if (!t.title.empty()) out += t.title + "\n";
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const auto& r = cells[k];
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) line += "  ";
            const bool right = k > 0 && numeric(t.rows[k - 1][i]).has_value();
            const std::string pad(width[i] - r[i].size(), ' ');
            line += right ? pad + r[i] : r[i] + pad;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
        if (k == 0) {
            std::size_t total = 0;
            for (auto w : width) total += w;
            out += std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') + "\n";
        }
    }
    return out;
}

std::string render_svg(const Table& t, std::size_t x_column, const std::vector<std::size_t>& y_columns,
                       const std::string& y_label) {
    constexpr double width = 720, height = 420, left = 80, right = 160, top = 40, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    static constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

    double y_max = 0.0;
    for (const auto& row : t.rows)
        for (auto c : y_columns)
            if (auto v = numeric(row[c]); v && std::isfinite(*v)) y_max = std::max(y_max, *v);
    if (y_max <= 0.0) y_max = 1.0;

    const std::size_t n = t.rows.size();
    auto x_at = [&](std::size_t i) { return left + (n > 1 ? plot_w * i / (n - 1) : plot_w / 2); };
    auto y_at = [&](double v) { return top + plot_h * (1.0 - v / y_max); };

    std::string s;
    s += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
                     "viewBox=\"0 0 {} {}\" font-family=\"sans-serif\" font-size=\"12\">\n",
                     width, height, width, height);
    s += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", width, height);
    s += fmt::format("<text x=\"{}\" y=\"24\" font-size=\"15\">{}</text>\n", left, xml_escape(t.title));
    s += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n", left, top, top + plot_h);
    s += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n", left, top + plot_h,
                     left + plot_w);
    for (int k = 0; k <= 4; ++k) {
        const double v = y_max * k / 4.0;
        s += fmt::format("<text x=\"{}\" y=\"{:.1f}\" text-anchor=\"end\">{:.4g}</text>\n", left - 6, y_at(v) + 4, v);
    }
    const std::size_t label_every = std::max<std::size_t>(1, n / 13);
    for (std::size_t i = 0; i < n; i += label_every)
        s += fmt::format("<text x=\"{:.1f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", x_at(i),
                         top + plot_h + 18, xml_escape(format_cell(t.rows[i][x_column])));
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", left + plot_w / 2,
                     height - 14, xml_escape(t.columns[x_column]));
    s += fmt::format("<text x=\"16\" y=\"{}\" transform=\"rotate(-90 16 {})\" text-anchor=\"middle\">{}</text>\n",
                     top + plot_h / 2, top + plot_h / 2, xml_escape(y_label));

    for (std::size_t k = 0; k < y_columns.size(); ++k) {
        const char* colour = palette[k % std::size(palette)];
        std::string points;
        for (std::size_t i = 0; i < n; ++i) {
            auto v = numeric(t.rows[i][y_columns[k]]);
            if (!v || !std::isfinite(*v)) continue;
            points += fmt::format("{:.2f},{:.2f} ", x_at(i), y_at(*v));
        }
        if (!points.empty()) points.pop_back();
        s += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"2\" points=\"{}\"/>\n", colour,
                         points);
        const double ly = top + 16.0 * k + 8;
        s += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" stroke-width=\"2\"/>\n",
                         left + plot_w + 12, ly, left + plot_w + 32, colour);
        s += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", left + plot_w + 38, ly + 4,
                         xml_escape(t.columns[y_columns[k]]));
    }
    s += "</svg>\n";
    return s;
}

}  // namespace lockcalc
