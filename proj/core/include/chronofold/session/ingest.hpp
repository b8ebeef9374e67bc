#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "chronofold/model/record.hpp"
#include "chronofold/session/csv.hpp"

namespace chronofold {

enum class CsvLayout { automatic, wide, longFormat };

/// Numeric time, or an ISO date (YYYY-MM-DD) as days since 1970-01-01.
std::optional<double> parse_time(std::string_view text);

/// Wide layout: first column is time, every other column a variable. Empty
/// cells are missing observations.
std::vector<TemporalRecord> records_from_wide(const CsvTable& csv);

/// Long layout: columns time, variable, value and optionally individual;
/// any other column is kept as a per-record attribute.
std::vector<TemporalRecord> records_from_long(const CsvTable& csv);

/// Long when the header has both a variable and a value column, else wide.
CsvLayout detect_layout(const CsvTable& csv);

std::vector<TemporalRecord> records_from_csv(const CsvTable& csv, CsvLayout layout);
std::vector<TemporalRecord> load_records(const std::filesystem::path& path,
                                         CsvLayout layout = CsvLayout::automatic);

}  // namespace chronofold
