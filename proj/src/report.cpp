#include "grovent/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace grovent {

namespace {

double as_double(const Cell& cell)
{
    if (const auto* d = std::get_if<double>(&cell)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return double(*i);
    if (const auto* b = std::get_if<bool>(&cell)) return *b ? 1.0 : 0.0;
    return std::nan("");
}

std::string cell_text(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) return format_number(v);
            else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return v;
        },
        cell);
}

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

nlohmann::ordered_json cell_json(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return nullptr;
                return std::stod(format_number(v));
            } else {
                return v;
            }
        },
        cell);
}

std::string xml_escape(const std::string& text)
{
    std::string out;
    for (char c : text) {
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

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size()) throw std::invalid_argument("row width does not match column count");
    rows.push_back(std::move(row));
}

std::size_t Table::column(const std::string& name) const
{
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw std::out_of_range("no column named " + name);
    return static_cast<std::size_t>(it - columns.begin());
}

std::string format_number(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

void write_csv(std::ostream& os, const Table& table)
{
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        os << (c ? "," : "") << csv_field(table.columns[c]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(cell_text(row[c]));
        os << '\n';
    }
}

void write_json(std::ostream& os, const nlohmann::ordered_json& config, const Table& table)
{
    nlohmann::ordered_json doc;
    doc["config"] = config;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json rec;
        for (std::size_t c = 0; c < row.size(); ++c) rec[table.columns[c]] = cell_json(row[c]);
        doc["records"].push_back(std::move(rec));
    }
    os << doc.dump(2) << '\n';
}

void write_svg(std::ostream& os, const std::string& title, const Table& table, const std::string& x_column,
               const std::vector<PlotSeries>& series)
{
    constexpr double width = 640, height = 420;
    constexpr double left = 70, right = 20, top = 40, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    const std::size_t xi = table.column(x_column);
    double x_min = 0, x_max = 1;
    if (!table.rows.empty()) {
        x_min = x_max = as_double(table.rows.front()[xi]);
        for (const auto& row : table.rows) {
            x_min = std::min(x_min, as_double(row[xi]));
            x_max = std::max(x_max, as_double(row[xi]));
        }
    }
    if (x_max == x_min) x_max = x_min + 1;

    struct Prepared {
        const PlotSeries* spec;
        std::vector<double> y;
    };
    std::vector<Prepared> prepared;
    double y_max = 0.0;
    for (const auto& s : series) {
        const std::size_t yi = table.column(s.column);
        Prepared p{&s, {}};
        for (const auto& row : table.rows) p.y.push_back(as_double(row[yi]));
        if (s.normalize) {
            const double peak = p.y.empty() ? 0.0 : *std::max_element(p.y.begin(), p.y.end());
            if (peak > 0) for (double& v : p.y) v /= peak;
        }
        for (double v : p.y) y_max = std::max(y_max, v);
        prepared.push_back(std::move(p));
    }
    if (y_max <= 0) y_max = 1;
    y_max *= 1.05;

    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return top + plot_h - y / y_max * plot_h; };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";

    // XML comments may not contain "--".
    std::ostringstream csv;
    write_csv(csv, table);
    std::string data = csv.str();
    for (std::size_t pos; (pos = data.find("--")) != std::string::npos;) data.replace(pos, 2, "- -");
    os << "<!-- data\n" << data << "-->\n";

    os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
       << xml_escape(title) << "</text>\n";
    os << "<g stroke=\"black\" stroke-width=\"1\">\n"
       << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
       << top + plot_h << "\"/>\n"
       << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
       << "\"/>\n</g>\n";

    os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    constexpr int ticks = 5;
    for (int t = 0; t <= ticks; ++t) {
        const double yv = y_max * t / ticks;
        const double xv = x_min + (x_max - x_min) * t / ticks;
        os << "<text x=\"" << left - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
           << format_number(std::round(yv * 1000) / 1000) << "</text>\n";
        os << "<text x=\"" << px(xv) << "\" y=\"" << top + plot_h + 16 << "\" text-anchor=\"middle\">"
           << format_number(std::round(xv * 100) / 100) << "</text>\n";
    }
    os << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">"
       << xml_escape(x_column) << "</text>\n</g>\n";

    double legend_y = top + 10;
    for (const auto& p : prepared) {
        os << "<polyline fill=\"none\" stroke=\"" << xml_escape(p.spec->colour) << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < p.y.size(); ++i) {
            os << (i ? " " : "") << format_number(px(as_double(table.rows[i][xi]))) << ','
               << format_number(py(p.y[i]));
        }
        os << "\"/>\n";
        os << "<text x=\"" << left + plot_w - 150 << "\" y=\"" << legend_y << "\" font-family=\"sans-serif\" "
           << "font-size=\"12\" fill=\"" << xml_escape(p.spec->colour) << "\">" << xml_escape(p.spec->label)
           << "</text>\n";
        legend_y += 16;
    }
    os << "</svg>\n";
}

}  // namespace grovent
