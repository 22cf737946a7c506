#ifndef IZETA_FORMAT_HPP
#define IZETA_FORMAT_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace izeta {

/// %.15g
std::string format_number(double x);

using Cell = std::variant<double, long long, std::string>;

/// Column-named table written either as CSV or as a JSON array of row objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);
/// format is "csv" or "json".
void write_table(std::ostream& out, const Table& table, const std::string& format);

/// Writes <path>.meta.json holding the command, config text and a UTC timestamp.
/// Kept apart from the primary output so reruns produce identical data files.
void write_metadata_sidecar(const std::string& path, const std::string& command, const std::string& config_text);

}  // namespace izeta

#endif  // IZETA_FORMAT_HPP
