#include "monoclosure/cli/table.hpp"

#include <ostream>
#include <sstream>

namespace monoclosure::cli {

namespace {

std::string csv_field(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string markdown_cell(const std::string& cell) {
  std::string out;
  for (char c : cell) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void csv_line(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << csv_field(cells[i]);
  }
  out << '\n';
}

void markdown_line(const std::vector<std::string>& cells, std::ostream& out) {
  out << '|';
  for (const auto& c : cells) out << ' ' << markdown_cell(c) << " |";
  out << '\n';
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else {
      cells.back() += c;
    }
  }
  return cells;
}

std::vector<std::string> split_markdown_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (std::size_t i = 1; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '\\' && i + 1 < line.size() && line[i + 1] == '|') {
      cur += '|';
      ++i;
    } else if (c == '|') {
      // Cells are written as " text ".
      cells.push_back(cur.size() >= 2 ? cur.substr(1, cur.size() - 2) : std::string());
      cur.clear();
    } else {
      cur += c;
    }
  }
  return cells;
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  csv_line(table.header, out);
  for (const auto& row : table.rows) csv_line(row, out);
}

void write_markdown(const Table& table, std::ostream& out) {
  markdown_line(table.header, out);
  out << '|';
  for (std::size_t i = 0; i < table.header.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& row : table.rows) markdown_line(row, out);
}

Table read_csv(const std::string& text) {
  Table table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      table.header = split_csv_line(line);
      first = false;
    } else {
      table.add(split_csv_line(line));
    }
  }
  return table;
}

Table read_markdown(const std::string& text) {
  Table table;
  std::istringstream in(text);
  std::string line;
  int index = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] != '|') continue;
    if (index == 0) {
      table.header = split_markdown_line(line);
    } else if (index > 1) {
      table.add(split_markdown_line(line));
    }
    ++index;
  }
  return table;
}

}  // namespace monoclosure::cli
