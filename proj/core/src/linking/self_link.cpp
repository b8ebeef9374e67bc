#include "chronofold/linking/self_link.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "chronofold/model/errors.hpp"

namespace chronofold {

std::string_view to_string(HighlightMode mode) {
  switch (mode) {
    case HighlightMode::singlePoint: return "singlePoint";
    case HighlightMode::wholeSeries: return "wholeSeries";
    case HighlightMode::sameTime: return "sameTime";
  }
  return "singlePoint";
}

std::optional<HighlightMode> parse_highlight_mode(std::string_view text) {
  if (text == "single" || text == "singlePoint" || text == "point") {
    return HighlightMode::singlePoint;
  }
  if (text == "series" || text == "wholeSeries") return HighlightMode::wholeSeries;
  if (text == "time" || text == "sameTime") return HighlightMode::sameTime;
  return std::nullopt;
}

std::vector<std::size_t> expand_selection(const AttributeTable& table,
                                          std::span<const std::size_t> ids, HighlightMode mode) {
  std::vector<std::size_t> rows;
  for (std::size_t id : ids) {
    if (id < table.row_count()) rows.push_back(id);
  }
  if (mode != HighlightMode::singlePoint) {
    const char* column = mode == HighlightMode::wholeSeries ? "series" : "time";
    auto keys = table.key_column(column);
    if (!keys) {
      throw LinkError("table '" + table.name() + "' has no '" + column + "' column to highlight by");
    }
    std::set<std::string> wanted;
    for (std::size_t row : rows) wanted.insert((*keys)[row]);
    rows.clear();
    for (std::size_t row = 0; row < keys->size(); ++row) {
      if (wanted.count((*keys)[row])) rows.push_back(row);
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

std::optional<ChangeEvent> self_link(AttributeTable& table, std::span<const std::size_t> ids,
                                     HighlightMode mode) {
  return table.select(expand_selection(table, ids, mode));
}

}  // namespace chronofold
