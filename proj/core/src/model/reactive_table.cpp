#include "chronofold/model/reactive_table.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "chronofold/model/errors.hpp"

namespace chronofold {

namespace {

constexpr std::array<std::string_view, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string format_time(double t) {
  if (std::floor(t) == t && std::abs(t) < 1e15) {
    return std::to_string(static_cast<long long>(t));
  }
  std::string s = std::to_string(t);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string describe(const TemporalRecord& r) {
  std::string key = "(" + (r.time_label.empty() ? format_time(r.time) : r.time_label) + ", " +
                    r.variable;
  if (!r.individual.empty()) key += ", " + r.individual;
  return key + ")";
}

bool equally_spaced(const std::vector<double>& times) {
  if (times.size() < 3) return true;
  const double step = times[1] - times[0];
  for (std::size_t k = 2; k < times.size(); ++k) {
    const double d = times[k] - times[k - 1];
    if (std::abs(d - step) > 1e-9 * std::max(1.0, std::abs(step))) return false;
  }
  return true;
}

}  // namespace

std::span<const std::string_view> qualitative_palette() { return kPalette; }

ReactiveTable ReactiveTable::ingest(std::vector<TemporalRecord> records, std::string name) {
  if (records.empty()) throw IngestError("no records to ingest");

  std::vector<std::string> variables;
  std::vector<std::string> individuals;
  std::map<std::string, int> variable_ids;
  std::map<std::string, int> individual_ids;
  std::map<std::pair<int, int>, int> series_ids;
  std::vector<std::pair<int, int>> series_keys;

  const std::size_t n = records.size();
  LineGroups groups;
  groups.variable.resize(n);
  groups.individual.resize(n);
  groups.series.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    TemporalRecord& r = records[i];
    if (!std::isfinite(r.value)) {
      throw IngestError("non-finite value at row " + std::to_string(i), describe(r));
    }
    if (!std::isfinite(r.time)) {
      throw IngestError("non-finite time at row " + std::to_string(i), describe(r));
    }
    if (r.time_label.empty()) r.time_label = format_time(r.time);

    auto [vit, vnew] = variable_ids.emplace(r.variable, static_cast<int>(variables.size()) + 1);
    if (vnew) variables.push_back(r.variable);
    auto [iit, inew] =
        individual_ids.emplace(r.individual, static_cast<int>(individuals.size()) + 1);
    if (inew) individuals.push_back(r.individual);
    const std::pair<int, int> key{vit->second, iit->second};
    auto [sit, snew] = series_ids.emplace(key, static_cast<int>(series_keys.size()) + 1);
    if (snew) series_keys.push_back(key);

    groups.variable[i] = vit->second;
    groups.individual[i] = iit->second;
    groups.series[i] = sit->second;
  }

  const std::size_t series_count = series_keys.size();
  std::vector<std::vector<std::size_t>> series_rows(series_count);
  for (std::size_t i = 0; i < n; ++i) {
    series_rows[static_cast<std::size_t>(groups.series[i] - 1)].push_back(i);
  }

  std::vector<double> normalized(n, 0.0);
  std::vector<bool> irregular(series_count, false);
  for (std::size_t s = 0; s < series_count; ++s) {
    auto& rows = series_rows[s];
    std::stable_sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
      return records[a].time < records[b].time;
    });
    for (std::size_t k = 1; k < rows.size(); ++k) {
      if (records[rows[k]].time == records[rows[k - 1]].time) {
        throw IngestError("duplicate record " + describe(records[rows[k]]),
                          describe(records[rows[k]]));
      }
    }
    if (rows.size() < kMinSeriesLength) {
      const TemporalRecord& r = records[rows.front()];
      throw IngestError("series '" + r.variable + (r.individual.empty() ? "" : "/" + r.individual) +
                            "' has " + std::to_string(rows.size()) + " points; at least " +
                            std::to_string(kMinSeriesLength) + " are required",
                        r.variable);
    }
    std::vector<double> times;
    times.reserve(rows.size());
    for (std::size_t row : rows) times.push_back(records[row].time);
    if (equally_spaced(times)) {
      for (std::size_t k = 0; k < rows.size(); ++k) {
        normalized[rows[k]] = static_cast<double>(k + 1);
      }
    } else {
      irregular[s] = true;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        normalized[rows[k]] = times[k] - times.front() + 1.0;
      }
    }
  }

  std::vector<PointAttributes> attrs(n);
  for (std::size_t i = 0; i < n; ++i) {
    attrs[i].color = std::string(kPalette[static_cast<std::size_t>(groups.variable[i] - 1) %
                                          kPalette.size()]);
  }

  ReactiveTable table(std::move(name), std::move(attrs));
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = records[i].value;
  table.coords_ = CoordinateState::initial(std::move(normalized), std::move(values),
                                           std::move(groups));
  table.records_ = std::move(records);
  table.irregular_ = std::move(irregular);
  table.variables_ = std::move(variables);
  table.individuals_ = std::move(individuals);
  table.series_rows_ = std::move(series_rows);
  for (const auto& [v, ind] : series_keys) {
    const std::string& iname = table.individuals_[static_cast<std::size_t>(ind - 1)];
    table.series_names_.push_back(table.variables_[static_cast<std::size_t>(v - 1)] +
                                  (iname.empty() ? "" : "/" + iname));
  }
  return table;
}

bool ReactiveTable::irregular() const {
  return std::any_of(irregular_.begin(), irregular_.end(), [](bool b) { return b; });
}

std::optional<std::vector<std::string>> ReactiveTable::key_column(std::string_view name) const {
  std::vector<std::string> out;
  out.reserve(records_.size());
  if (name == "time" || name == "Time") {
    for (const auto& r : records_) out.push_back(r.time_label);
    return out;
  }
  if (name == "variable" || name == "Variable") {
    for (const auto& r : records_) out.push_back(r.variable);
    return out;
  }
  if (name == "individual") {
    for (const auto& r : records_) out.push_back(r.individual);
    return out;
  }
  if (name == "series") {
    for (int s : coords_.groups.series) out.push_back(std::to_string(s));
    return out;
  }
  if (name == "line") {
    for (int l : coords_.groups.line) out.push_back(std::to_string(l));
    return out;
  }
  if (name == "pointId") {
    for (std::size_t i = 0; i < records_.size(); ++i) out.push_back(std::to_string(i));
    return out;
  }
  if (auto extra = AttributeTable::key_column(name)) return extra;
  bool found = false;
  for (const auto& r : records_) {
    auto it = r.columns.find(std::string(name));
    if (it != r.columns.end()) {
      found = true;
      out.push_back(it->second);
    } else {
      out.emplace_back();
    }
  }
  if (found) return out;
  return std::nullopt;
}

std::vector<std::string> ReactiveTable::key_column_names() const {
  std::vector<std::string> names = {"time", "variable", "individual", "series", "line", "pointId"};
  std::set<std::string> extra;
  for (const auto& r : records_) {
    for (const auto& [k, _] : r.columns) extra.insert(k);
  }
  names.insert(names.end(), extra.begin(), extra.end());
  for (auto& k : AttributeTable::key_column_names()) names.push_back(k);
  return names;
}

}  // namespace chronofold
