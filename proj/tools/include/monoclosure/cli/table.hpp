#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoclosure::cli {

/// A rectangular report rendered as CSV or a markdown table. Both renderings
/// carry exactly the same cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

void write_csv(const Table& table, std::ostream& out);
void write_markdown(const Table& table, std::ostream& out);

/// Inverse of the writers, for tests.
Table read_csv(const std::string& text);
Table read_markdown(const std::string& text);

}  // namespace monoclosure::cli
