#include "chronofold/linking/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include "chronofold/model/errors.hpp"

namespace chronofold {

namespace {

constexpr std::string_view kNeutralColor = "#7f7f7f";

std::vector<PointAttributes> neutral_rows(std::size_t n) {
  PointAttributes attrs;
  attrs.color = std::string(kNeutralColor);
  return std::vector<PointAttributes>(n, attrs);
}

}  // namespace

WideTable::WideTable(std::string name, std::size_t rows)
    : AttributeTable(std::move(name), neutral_rows(rows)) {}

WideTable WideTable::from_long(const ReactiveTable& table, std::string name) {
  std::map<double, std::string> times;
  for (const auto& r : table.records()) times.emplace(r.time, r.time_label);
  std::map<double, std::size_t> row_of;
  WideTable wide(std::move(name), times.size());
  for (const auto& [t, label] : times) {
    row_of.emplace(t, wide.labels_.size());
    wide.labels_.push_back(label);
  }
  for (std::size_t s = 0; s < table.series_count(); ++s) {
    wide.columns_.push_back(table.series_name(s));
    std::vector<double> column(times.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t row : table.series_rows(s)) {
      column[row_of.at(table.record(row).time)] = table.record(row).value;
    }
    wide.values_.push_back(std::move(column));
  }
  return wide;
}

double WideTable::value(std::size_t row, std::size_t column) const {
  return values_.at(column).at(row);
}

std::optional<std::vector<std::string>> WideTable::key_column(std::string_view name) const {
  if (name == "time" || name == "Time") return labels_;
  return AttributeTable::key_column(name);
}

std::vector<std::string> WideTable::key_column_names() const {
  std::vector<std::string> names = {"time"};
  for (auto& k : AttributeTable::key_column_names()) names.push_back(k);
  return names;
}

CategoryTable::CategoryTable(std::string name, std::size_t rows)
    : AttributeTable(std::move(name), neutral_rows(rows)) {}

CategoryTable CategoryTable::from_column(const AttributeTable& source, std::string_view column,
                                         std::string name, std::vector<std::string> order) {
  auto keys = source.key_column(column);
  if (!keys) {
    throw LinkError("table '" + source.name() + "' has no column '" + std::string(column) + "'");
  }
  std::vector<std::string> categories = std::move(order);
  for (const auto& key : *keys) {
    if (std::find(categories.begin(), categories.end(), key) == categories.end()) {
      categories.push_back(key);
    }
  }
  CategoryTable table(std::move(name), categories.size());
  table.column_ = std::string(column);
  table.counts_.assign(categories.size(), 0);
  for (const auto& key : *keys) {
    const auto it = std::find(categories.begin(), categories.end(), key);
    ++table.counts_[static_cast<std::size_t>(it - categories.begin())];
  }
  table.categories_ = std::move(categories);
  return table;
}

std::optional<std::vector<std::string>> CategoryTable::key_column(std::string_view name) const {
  if (name == column_) return categories_;
  return AttributeTable::key_column(name);
}

std::vector<std::string> CategoryTable::key_column_names() const {
  std::vector<std::string> names = {column_};
  for (auto& k : AttributeTable::key_column_names()) names.push_back(k);
  return names;
}

Binning histogram_bins(const std::vector<double>& values, std::size_t bin_count) {
  Binning out;
  if (values.empty()) return out;
  bin_count = std::max<std::size_t>(bin_count, 1);
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (hi == lo) bin_count = 1;
  const double width = bin_count == 1 ? std::max(hi - lo, 1.0) : (hi - lo) / bin_count;
  const auto label = [&](std::size_t k) {
    char buf[64];
    const double a = lo + width * k;
    const double b = k + 1 == bin_count ? std::max(hi, a) : lo + width * (k + 1);
    std::snprintf(buf, sizeof buf, k + 1 == bin_count ? "[%g,%g]" : "[%g,%g)", a, b);
    return std::string(buf);
  };
  for (std::size_t k = 0; k < bin_count; ++k) out.bins.push_back(label(k));
  for (double v : values) {
    auto k = static_cast<std::size_t>(std::floor((v - lo) / width));
    k = std::min(k, bin_count - 1);
    out.labels.push_back(out.bins[k]);
  }
  return out;
}

}  // namespace chronofold
