#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chronofold/layers/layers.hpp"
#include "chronofold/session/session.hpp"

namespace chronofold {

/// Wire message kinds. Clients send hello, loadData, interact, brush and
/// queryAt; the server answers with hello, layerDiff, queryAt or error.
/// Each message is one JSON object carried in one WebSocket message.
namespace msg {
inline constexpr const char* hello = "hello";
inline constexpr const char* load_data = "loadData";
inline constexpr const char* interact = "interact";
inline constexpr const char* brush = "brush";
inline constexpr const char* query_at = "queryAt";
inline constexpr const char* layer_diff = "layerDiff";
inline constexpr const char* error = "error";
}  // namespace msg

inline constexpr int kProtocolVersion = 1;

nlohmann::json to_json(const LayerSet& layers);
nlohmann::json to_json(const QueryResult& result);

/// Brushed rows of every view, keyed by view name.
using BrushSnapshot = std::map<std::string, std::vector<std::size_t>>;
BrushSnapshot brush_snapshot(const Session& session);

/// {"view": {"on": [...], "off": [...]}} for views whose selection changed.
nlohmann::json brush_diff(const BrushSnapshot& before, const BrushSnapshot& after);

/// Full state of a session as a layerDiff, for fresh clients.
nlohmann::json full_state(const Session& session);

/// Message kind; a bare {"op": ...} is an interact (or brush) message.
std::string message_type(const nlohmann::json& message);

}  // namespace chronofold
