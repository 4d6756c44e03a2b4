#include "gupmag/sweep.hpp"

#include "json.hpp" // vendored nlohmann/json

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>

namespace gupmag {

using nlohmann::json;

std::string format_cell(const Cell& cell) {
    if (std::holds_alternative<std::monostate>(cell))
        return "";
    if (std::holds_alternative<long>(cell))
        return std::to_string(std::get<long>(cell));
    if (std::holds_alternative<std::string>(cell))
        return std::get<std::string>(cell);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(cell));
    return buf;
}

std::vector<double> SweepAxis::grid() const {
    if (count < 2)
        throw DomainError("SweepAxis: point count must be >= 2");
    if (!(hi > lo))
        throw DomainError("SweepAxis: range must have positive length");
    if (log_spacing && !(lo > 0.0))
        throw DomainError("SweepAxis: log spacing requires lo > 0");

    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) {
        const double f = double(i) / (count - 1);
        g[i] = log_spacing ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f;
    }
    return g;
}

SweepTable::SweepTable(std::vector<std::string> columns)
    : columns_(std::move(columns)) {
    if (columns_.empty())
        throw DomainError("SweepTable: need at least one column");
}

void SweepTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size())
        throw DomainError("SweepTable: row width does not match columns");
    rows_.push_back(std::move(row));
}

void SweepTable::set_meta(const std::string& key, const std::string& value) {
    meta_.emplace_back(key, value);
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void SweepTable::write_csv(std::ostream& os, bool with_meta) const {
    if (with_meta) {
        os << "#";
        for (const auto& [k, v] : meta_)
            os << " " << k << "=" << v;
        os << "\n";
    }
    for (std::size_t c = 0; c < columns_.size(); ++c)
        os << (c ? "," : "") << csv_escape(columns_[c]);
    os << "\n";
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << csv_escape(format_cell(row[c]));
        os << "\n";
    }
}

std::string SweepTable::to_csv(bool with_meta) const {
    std::ostringstream os;
    write_csv(os, with_meta);
    return os.str();
}

namespace {

json cell_to_json(const Cell& cell) {
    if (std::holds_alternative<std::monostate>(cell))
        return nullptr;
    if (std::holds_alternative<double>(cell))
        return std::get<double>(cell);
    if (std::holds_alternative<long>(cell))
        return std::get<long>(cell);
    return std::get<std::string>(cell);
}

Cell cell_from_json(const json& j) {
    if (j.is_null())
        return std::monostate{};
    if (j.is_number_integer())
        return static_cast<long>(j.get<long long>());
    if (j.is_number_float())
        return j.get<double>();
    if (j.is_string())
        return j.get<std::string>();
    throw DomainError("SweepTable::from_json: unsupported cell type");
}

} // namespace

std::string SweepTable::to_json(bool with_meta) const {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["columns"] = columns_;
    json rows = json::array();
    for (const auto& row : rows_) {
        json jrow = json::array();
        for (const auto& cell : row)
            jrow.push_back(cell_to_json(cell));
        rows.push_back(std::move(jrow));
    }
    doc["rows"] = std::move(rows);
    if (with_meta) {
        json meta = json::object();
        for (const auto& [k, v] : meta_)
            meta[k] = v;
        doc["meta"] = std::move(meta);
    }
    return doc.dump(2) + "\n";
}

SweepTable SweepTable::from_json(const std::string& text) {
    json doc = json::parse(text);
    if (!doc.contains("columns") || !doc.contains("rows"))
        throw DomainError("SweepTable::from_json: missing columns/rows");
    SweepTable table(doc["columns"].get<std::vector<std::string>>());
    for (const auto& jrow : doc["rows"]) {
        std::vector<Cell> row;
        row.reserve(jrow.size());
        for (const auto& jcell : jrow)
            row.push_back(cell_from_json(jcell));
        table.add_row(std::move(row));
    }
    if (doc.contains("meta"))
        for (const auto& [k, v] : doc["meta"].items())
            table.set_meta(k, v.get<std::string>());
    return table;
}

bool SweepTable::operator==(const SweepTable& other) const {
    return columns_ == other.columns_ && rows_ == other.rows_ &&
           meta_ == other.meta_;
}

SweepTable run_sweep(const std::vector<std::string>& columns,
                     const std::vector<double>& grid,
                     const std::function<std::vector<Cell>(int, double)>& point,
                     int workers) {
    if (workers < 1)
        throw DomainError("run_sweep: workers must be >= 1");

    std::vector<std::vector<Cell>> slots(grid.size());

    if (workers == 1 || grid.size() < 2) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            slots[i] = point(static_cast<int>(i), grid[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= grid.size())
                        return;
                    slots[i] = point(static_cast<int>(i), grid[i]);
                }
            });
        for (auto& th : pool)
            th.join();
    }

    SweepTable table(columns);
    for (auto& row : slots)
        table.add_row(std::move(row));
    return table;
}

} // namespace gupmag
