#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chronofold/model/attribute_table.hpp"

namespace chronofold {

/// How a brushed point extends within its own view.
enum class HighlightMode { singlePoint, wholeSeries, sameTime };

std::string_view to_string(HighlightMode mode);
/// Accepts "single"/"singlePoint", "series"/"wholeSeries", "time"/"sameTime".
std::optional<HighlightMode> parse_highlight_mode(std::string_view text);

/// Rows selected by brushing `ids` under `mode`: the ids themselves, every
/// row of their series, or every row sharing their time label. Throws
/// LinkError when the table lacks the needed key column.
std::vector<std::size_t> expand_selection(const AttributeTable& table,
                                          std::span<const std::size_t> ids, HighlightMode mode);

/// Replaces the table's brushed set with the expanded selection.
std::optional<ChangeEvent> self_link(AttributeTable& table, std::span<const std::size_t> ids,
                                     HighlightMode mode);

}  // namespace chronofold
