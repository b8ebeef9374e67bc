#include "chronofold/session/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <string>

#include "chronofold/model/errors.hpp"

namespace chronofold {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::optional<double> parse_number(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

std::optional<int> parse_int(std::string_view text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

std::string where(const CsvTable& csv, std::size_t row) {
  return "line " + std::to_string(csv.line_numbers.at(row));
}

double require_time(const CsvTable& csv, std::size_t row, const std::string& text) {
  auto t = parse_time(text);
  if (!t) throw IngestError(where(csv, row) + ": cannot read time '" + text + "'", text);
  return *t;
}

int find_column(const CsvTable& csv, std::initializer_list<std::string_view> names) {
  for (std::size_t c = 0; c < csv.header.size(); ++c) {
    const auto h = lower(csv.header[c]);
    for (auto name : names) {
      if (h == name) return static_cast<int>(c);
    }
  }
  return -1;
}

}  // namespace

std::optional<double> parse_time(std::string_view text) {
  if (auto v = parse_number(text)) return v;
  if (text.size() == 10 && text[4] == '-' && text[7] == '-') {
    const auto y = parse_int(text.substr(0, 4));
    const auto m = parse_int(text.substr(5, 2));
    const auto d = parse_int(text.substr(8, 2));
    if (!y || !m || !d) return std::nullopt;
    const std::chrono::year_month_day date{std::chrono::year{*y},
                                           std::chrono::month{static_cast<unsigned>(*m)},
                                           std::chrono::day{static_cast<unsigned>(*d)}};
    if (!date.ok()) return std::nullopt;
    return static_cast<double>(std::chrono::sys_days{date}.time_since_epoch().count());
  }
  return std::nullopt;
}

std::vector<TemporalRecord> records_from_wide(const CsvTable& csv) {
  if (csv.header.size() < 2) {
    throw IngestError("wide data needs a time column and at least one variable column");
  }
  std::vector<TemporalRecord> records;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& row = csv.rows[r];
    const double t = require_time(csv, r, row[0]);
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (row[c].empty() || lower(row[c]) == "na") continue;
      const auto v = parse_number(row[c]);
      if (!v) {
        throw IngestError(where(csv, r) + ": column '" + csv.header[c] + "' has non-numeric value '" +
                              row[c] + "'",
                          csv.header[c]);
      }
      TemporalRecord rec;
      rec.time = t;
      rec.time_label = row[0];
      rec.variable = csv.header[c];
      rec.value = *v;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<TemporalRecord> records_from_long(const CsvTable& csv) {
  const int time_col = find_column(csv, {"time", "date", "year", "t"});
  const int var_col = find_column(csv, {"variable", "var"});
  const int value_col = find_column(csv, {"value", "y"});
  const int ind_col = find_column(csv, {"individual", "id", "group"});
  if (time_col < 0 || var_col < 0 || value_col < 0) {
    throw IngestError("long data needs time, variable and value columns");
  }
  std::vector<TemporalRecord> records;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& row = csv.rows[r];
    const auto v = parse_number(row[value_col]);
    if (!v) {
      throw IngestError(where(csv, r) + ": non-numeric value '" + row[value_col] + "'",
                        row[var_col]);
    }
    TemporalRecord rec;
    rec.time = require_time(csv, r, row[time_col]);
    rec.time_label = row[time_col];
    rec.variable = row[var_col];
    if (ind_col >= 0) rec.individual = row[ind_col];
    rec.value = *v;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int ci = static_cast<int>(c);
      if (ci == time_col || ci == var_col || ci == value_col || ci == ind_col) continue;
      rec.columns.emplace(csv.header[c], row[c]);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

CsvLayout detect_layout(const CsvTable& csv) {
  const bool has_var = find_column(csv, {"variable", "var"}) >= 0;
  const bool has_value = find_column(csv, {"value"}) >= 0;
  return has_var && has_value ? CsvLayout::longFormat : CsvLayout::wide;
}

std::vector<TemporalRecord> records_from_csv(const CsvTable& csv, CsvLayout layout) {
  if (layout == CsvLayout::automatic) layout = detect_layout(csv);
  return layout == CsvLayout::wide ? records_from_wide(csv) : records_from_long(csv);
}

std::vector<TemporalRecord> load_records(const std::filesystem::path& path, CsvLayout layout) {
  return records_from_csv(read_csv_file(path), layout);
}

}  // namespace chronofold
