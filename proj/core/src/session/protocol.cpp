#include "chronofold/session/protocol.hpp"

#include <algorithm>
#include <iterator>

#include "chronofold/model/errors.hpp"

namespace chronofold {

namespace {

nlohmann::json point(const Vec2& p) { return nlohmann::json::array({p.x, p.y}); }

nlohmann::json axes_json(const Axes& a) {
  return {{"xmin", a.xmin}, {"xmax", a.xmax},     {"ymin", a.ymin},
          {"ymax", a.ymax}, {"xticks", a.xticks}, {"yticks", a.yticks}};
}

}  // namespace

nlohmann::json to_json(const LayerSet& layers) {
  nlohmann::json j;
  j["mode"] = std::string(to_string(layers.mode));
  auto& pts = j["points"];
  pts["ids"] = layers.points.ids;
  std::vector<double> xs, ys;
  for (const auto& p : layers.points.positions) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  pts["x"] = xs;
  pts["y"] = ys;
  pts["color"] = layers.points.colors;
  pts["size"] = layers.points.sizes;

  j["lines"] = nlohmann::json::array();
  for (const auto& seg : layers.lines) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& p : seg.pieces) {
      pieces.push_back({p.from.x, p.from.y, p.to.x, p.to.y});
    }
    j["lines"].push_back(
        {{"from", seg.from}, {"to", seg.to}, {"line", seg.line}, {"color", seg.color},
         {"pieces", pieces}});
  }
  j["areas"] = nlohmann::json::array();
  for (const auto& poly : layers.areas) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& v : poly.vertices) vertices.push_back(point(v));
    nlohmann::json entry = {{"vertices", vertices}, {"color", poly.color}, {"segment", poly.segment}};
    entry["source"] = poly.source_point ? nlohmann::json(*poly.source_point) : nlohmann::json();
    j["areas"].push_back(std::move(entry));
  }
  j["brush"] = {{"points", layers.brush.points},
                {"segments", layers.brush.segments},
                {"polygons", layers.brush.polygons}};
  j["axes"] = axes_json(layers.axes);
  j["stats"] = nlohmann::json::array();
  for (const auto& s : layers.stats) {
    j["stats"].push_back({{"y", s.y}, {"xmin", s.xmin}, {"xmax", s.xmax}});
  }
  return j;
}

nlohmann::json to_json(const QueryResult& r) {
  return {{"point", r.point}, {"time", r.time_label}, {"variable", r.variable},
          {"individual", r.individual}, {"value", r.value}, {"x", r.x}, {"y", r.y}};
}

BrushSnapshot brush_snapshot(const Session& session) {
  BrushSnapshot out;
  for (const auto& name : session.view_names()) {
    out[name] = session.view(name).brushed_rows();
  }
  return out;
}

nlohmann::json brush_diff(const BrushSnapshot& before, const BrushSnapshot& after) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [view, rows] : after) {
    static const std::vector<std::size_t> none;
    const auto it = before.find(view);
    const auto& old_rows = it == before.end() ? none : it->second;
    std::vector<std::size_t> on, off;
    std::set_difference(rows.begin(), rows.end(), old_rows.begin(), old_rows.end(),
                        std::back_inserter(on));
    std::set_difference(old_rows.begin(), old_rows.end(), rows.begin(), rows.end(),
                        std::back_inserter(off));
    if (on.empty() && off.empty()) continue;
    out[view] = {{"on", on}, {"off", off}};
  }
  return out;
}

nlohmann::json full_state(const Session& session) {
  nlohmann::json j;
  j["type"] = msg::layer_diff;
  j["version"] = session.version();
  j["reset"] = true;
  j["aspect"] = session.aspect();
  const auto& c = session.coords();
  j["coords"] = {{"x", c.x}, {"y", c.y}, {"line", c.groups.line}};
  j["layers"] = to_json(session.layers());
  j["brushed"] = brush_diff({}, brush_snapshot(session));
  j["views"] = session.view_names();
  return j;
}

std::string message_type(const nlohmann::json& message) {
  if (!message.is_object()) throw ParseError("message must be a JSON object", 0);
  if (message.contains("type")) {
    if (!message["type"].is_string()) throw ParseError("'type' must be a string", 0);
    return message["type"].get<std::string>();
  }
  if (message.contains("op") && message["op"].is_string()) {
    return message["op"] == "brush" ? msg::brush : msg::interact;
  }
  throw ParseError("message has neither 'type' nor 'op'", 0);
}

}  // namespace chronofold
