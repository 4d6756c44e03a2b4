#pragma once

#include "gupmag/errors.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gupmag {

/// One table cell: number, text, or empty.  Failed sweep points carry text
/// status codes and empty numeric cells, never NaN.
using Cell = std::variant<std::monostate, double, long, std::string>;

std::string format_cell(const Cell& cell); // %.17g doubles, raw text

struct SweepAxis {
    std::string variable; // one of B, T, beta, omega0
    double lo = 0.0, hi = 0.0;
    int count = 0;
    bool log_spacing = false;

    std::vector<double> grid() const;
};

/// Rectangular result table with a fixed, versioned column order,
/// serializable to RFC-4180-style CSV and to JSON, both deterministic.
class SweepTable {
  public:
    static constexpr long kSchemaVersion = 1;

    explicit SweepTable(std::vector<std::string> columns);

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }

    void add_row(std::vector<Cell> row);
    void set_meta(const std::string& key, const std::string& value);
    const std::vector<std::pair<std::string, std::string>>& meta() const {
        return meta_;
    }

    /// CSV: optional "# key=value ..." meta line, header row, LF endings.
    void write_csv(std::ostream& os, bool with_meta) const;
    std::string to_csv(bool with_meta) const;

    std::string to_json(bool with_meta) const;
    static SweepTable from_json(const std::string& text);

    bool operator==(const SweepTable& other) const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
    std::vector<std::pair<std::string, std::string>> meta_;
};

/// Evaluate `point` at every grid index with `workers` threads; rows are
/// assembled strictly by index, so any worker count produces the same table.
/// `point` must be pure; exceptions inside it must be converted to flagged
/// rows by the callable itself.
SweepTable run_sweep(const std::vector<std::string>& columns,
                     const std::vector<double>& grid,
                     const std::function<std::vector<Cell>(int, double)>& point,
                     int workers = 1);

} // namespace gupmag
