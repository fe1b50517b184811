#include "pricedq/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "pricedq/errors.hpp"

namespace pricedq {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\n\r") != std::string::npos;
}

std::string csv_escape(const std::string& s) {
  if (!needs_quoting(s)) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_cell(const Cell& v) {
  switch (v.index()) {
    case 0: return std::get<std::string>(v);
    case 1: return std::to_string(std::get<long long>(v));
    case 2: return fmt_double(std::get<double>(v));
    default: return std::get<Rational>(v).to_string();
  }
}

Report::Report(std::string command, std::vector<std::string> columns)
    : command_(std::move(command)), columns_(std::move(columns)) {}

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size())
    throw InputError("report row has " + std::to_string(row.size()) + " cells, expected " +
                     std::to_string(columns_.size()));
  rows_.push_back(std::move(row));
}

void Report::sort_rows() {
  std::vector<std::pair<std::vector<std::string>, std::vector<Cell>>> keyed;
  keyed.reserve(rows_.size());
  for (auto& row : rows_) {
    std::vector<std::string> key;
    key.reserve(row.size());
    for (const Cell& c : row) key.push_back(format_cell(c));
    keyed.emplace_back(std::move(key), std::move(row));
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  rows_.clear();
  for (auto& [key, row] : keyed) rows_.push_back(std::move(row));
}

std::string Report::to_csv() const {
  std::string out;
  for (size_t j = 0; j < columns_.size(); ++j) {
    if (j) out += ',';
    out += csv_escape(columns_[j]);
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += csv_escape(format_cell(row[j]));
    }
    out += '\n';
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command_;
  doc["columns"] = columns_;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj;
    for (size_t j = 0; j < row.size(); ++j) {
      const Cell& c = row[j];
      if (std::holds_alternative<long long>(c))
        obj[columns_[j]] = std::get<long long>(c);
      else if (std::holds_alternative<double>(c))
        obj[columns_[j]] = std::get<double>(c);
      else
        obj[columns_[j]] = format_cell(c);
    }
    rows.push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

std::string Report::render(const std::string& format) const {
  if (format == "csv") return to_csv();
  if (format == "json") return to_json();
  throw InputError("unknown report format '" + format + "' (expected csv or json)");
}

void write_report_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open output file: " + path);
  out << content;
  if (!out) throw InputError("failed writing output file: " + path);
}

}  // namespace pricedq
