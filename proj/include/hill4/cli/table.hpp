#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace hill4::cli {

using Cell = std::variant<double, long long, std::string>;

// Column-oriented result of a subcommand. CSV: header row, ',' separator,
// doubles as %.17g. JSON: {"rows": [{column: value}...], "meta": {...}}.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();

  void add_row(std::vector<Cell> row);
};

std::string format_double(double x);

void write_csv(std::ostream& out, const Table& t);
void write_json(std::ostream& out, const Table& t);

}  // namespace hill4::cli
