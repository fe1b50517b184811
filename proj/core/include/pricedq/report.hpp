#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pricedq/rational.hpp"

namespace pricedq {

// One table cell.  Doubles format as %.10g, rationals exactly as "p/q";
// the JSON writer keeps integers and doubles as numbers.
using Cell = std::variant<std::string, long long, double, Rational>;

std::string format_cell(const Cell& v);

// Tabular command output.  Rows are kept in insertion order until
// sort_rows(), which orders them lexicographically by formatted cells so
// emitted bytes never depend on production order.
class Report {
public:
  Report(std::string command, std::vector<std::string> columns);

  const std::string& command() const { return command_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  void add_row(std::vector<Cell> row);  // InputError on width mismatch
  void sort_rows();

  std::string to_csv() const;   // header line + one line per row, LF endings
  std::string to_json() const;  // {"command", "columns", "rows": [{col: value}]}
  std::string render(const std::string& format) const;  // "csv" | "json"

private:
  std::string command_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

// Writes content to path, or to stdout when path is empty or "-".
void write_report_text(const std::string& path, const std::string& content);

}  // namespace pricedq
