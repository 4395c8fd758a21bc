#ifndef GROVENT_REPORT_HPP
#define GROVENT_REPORT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace grovent {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

/// Column-oriented result set shared by the CSV, JSON and SVG writers.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    /// Index of a column by name; throws std::out_of_range if absent.
    std::size_t column(const std::string& name) const;
};

/// "%.12g"
std::string format_number(double value);

/// Header row, comma separated, LF line endings.
void write_csv(std::ostream& os, const Table& table);

/// {"config": config, "records": [{column: value, ...}, ...]}; doubles are
/// rounded to 12 significant digits.
void write_json(std::ostream& os, const nlohmann::ordered_json& config, const Table& table);

struct PlotSeries {
    std::string column;
    std::string label;
    std::string colour;
    /// Rescale to a peak of 1 before plotting.
    bool normalize = false;
};

/// Static line plot of `series` against `x_column`. The full table is
/// embedded as a CSV comment so the file is self-describing.
void write_svg(std::ostream& os, const std::string& title, const Table& table, const std::string& x_column,
               const std::vector<PlotSeries>& series);

}  // namespace grovent

#endif
