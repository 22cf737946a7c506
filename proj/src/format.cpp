#include "izeta/format.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace izeta {

std::string format_number(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.15g", x);
  return buffer;
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("row width does not match the columns");
  rows.push_back(std::move(row));
}

namespace {

std::string cell_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell_text(row[c]);
    out << "\n";
  }
}

void write_json(std::ostream& out, const Table& table) {
  // Numbers go through format_number so JSON and CSV carry the same digits.
  out << "[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n " : "\n ") << "{";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? ", " : "") << nlohmann::json(table.columns[c]).dump() << ": ";
      const Cell& cell = table.rows[r][c];
      if (const auto* d = std::get_if<double>(&cell)) {
        out << (std::isfinite(*d) ? format_number(*d) : "null");
      } else if (const auto* i = std::get_if<long long>(&cell)) {
        out << *i;
      } else {
        out << nlohmann::json(std::get<std::string>(cell)).dump();
      }
    }
    out << "}";
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
}

void write_table(std::ostream& out, const Table& table, const std::string& format) {
  if (format == "csv") write_csv(out, table);
  else if (format == "json") write_json(out, table);
  else throw std::invalid_argument("unknown format: " + format);
}

void write_metadata_sidecar(const std::string& path, const std::string& command, const std::string& config_text) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  nlohmann::json meta = {{"command", command}, {"config", config_text}, {"created_utc", stamp}};
  std::ofstream out(path + ".meta.json");
  if (!out) throw std::runtime_error("cannot write " + path + ".meta.json");
  out << meta.dump(2) << "\n";
}

}  // namespace izeta
