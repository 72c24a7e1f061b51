#include "hill4/cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "hill4/error.hpp"

namespace hill4::cli {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw Error(Errc::invalid_argument, "row has " + std::to_string(row.size()) +
                                            " cells, table has " +
                                            std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // no "-0" in the output
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string csv_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

nlohmann::ordered_json json_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    // JSON has no inf/nan; emit them as strings rather than null.
    if (!std::isfinite(*d)) return format_double(*d);
    return *d == 0.0 ? 0.0 : *d;
  }
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

}  // namespace

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& t) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  doc["meta"] = t.meta;
  out << doc.dump(2) << '\n';
}

}  // namespace hill4::cli
