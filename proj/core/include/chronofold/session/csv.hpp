#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace chronofold {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based source line of each row
};

/// RFC 4180 style reader: comma separated, double-quoted fields may hold
/// commas, quotes ("") and newlines. Blank lines are skipped. Throws
/// ParseError naming the line for unterminated quotes or ragged rows.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::filesystem::path& path);

}  // namespace chronofold
