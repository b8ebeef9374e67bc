#include "chronofold/linking/link_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "chronofold/model/errors.hpp"

namespace chronofold {

namespace {

std::vector<std::string> require_column(const AttributeTable& table, const std::string& column) {
  auto keys = table.key_column(column);
  if (!keys) {
    throw LinkError("table '" + table.name() + "' has no linking column '" + column + "'");
  }
  return std::move(*keys);
}

}  // namespace

void LinkGraph::add_table(AttributeTable& table) {
  if (has_table(table.name())) throw LinkError("duplicate table name '" + table.name() + "'");
  tables_.push_back(&table);
}

bool LinkGraph::has_table(std::string_view name) const {
  return std::any_of(tables_.begin(), tables_.end(),
                     [&](const AttributeTable* t) { return t->name() == name; });
}

AttributeTable& LinkGraph::table(std::string_view name) const {
  for (AttributeTable* t : tables_) {
    if (t->name() == name) return *t;
  }
  throw LinkError("unknown table '" + std::string(name) + "'");
}

std::size_t LinkGraph::add_link(LinkSpec spec) {
  if (spec.target_variable.empty()) spec.target_variable = spec.variable;
  auto link = std::make_unique<Link>();
  link->source = &table(spec.source);
  link->target = &table(spec.target);
  if (link->source == link->target) throw LinkError("a table cannot link to itself");
  require_column(*link->source, spec.variable);
  require_column(*link->target, spec.target_variable);
  link->spec = std::move(spec);

  Link* raw = link.get();
  raw->subscriptions.push_back(
      raw->source->subscribe([this, raw](const ChangeEvent& e) { on_change(*raw, true, e); }));
  if (raw->spec.direction == LinkDirection::twoWay) {
    raw->subscriptions.push_back(
        raw->target->subscribe([this, raw](const ChangeEvent& e) { on_change(*raw, false, e); }));
  }
  links_.push_back(std::move(link));
  return links_.size() - 1;
}

void LinkGraph::on_change(Link& link, bool forward, const ChangeEvent& event) {
  const bool brushing = event.patch.brushed.has_value() || !event.cleared.empty();
  const bool coloring = link.spec.propagate_color && event.patch.color.has_value();
  if (!brushing && !coloring) return;
  if (link.guard || link.fired) {
    ++link.stats.suppressed;
    return;
  }
  Guard guard(link.guard);
  link.fired = true;
  ++link.stats.firings;
  ++action_firings_;

  AttributeTable& from = forward ? *link.source : *link.target;
  AttributeTable& to = forward ? *link.target : *link.source;
  const auto from_keys =
      require_column(from, forward ? link.spec.variable : link.spec.target_variable);
  const auto to_keys =
      require_column(to, forward ? link.spec.target_variable : link.spec.variable);

  if (brushing) {
    std::set<std::string> wanted;
    for (std::size_t row : from.brushed_rows()) wanted.insert(from_keys[row]);
    std::vector<std::size_t> rows;
    for (std::size_t row = 0; row < to_keys.size(); ++row) {
      if (wanted.count(to_keys[row])) rows.push_back(row);
    }
    to.select(rows);
  }
  if (coloring) {
    std::set<std::string> keys;
    for (std::size_t row : event.rows) keys.insert(from_keys[row]);
    std::vector<std::size_t> rows;
    for (std::size_t row = 0; row < to_keys.size(); ++row) {
      if (keys.count(to_keys[row])) rows.push_back(row);
    }
    AttributePatch patch;
    patch.color = event.patch.color;
    to.set_attributes(rows, patch);
  }
}

std::size_t LinkGraph::run(std::function<void()> action) {
  if (depth_ > 0) {
    queue_.push_back(std::move(action));
    return 0;
  }
  std::size_t first = 0;
  bool is_first = true;
  queue_.push_front(std::move(action));
  while (!queue_.empty()) {
    auto next = std::move(queue_.front());
    queue_.pop_front();
    for (auto& link : links_) link->fired = false;
    action_firings_ = 0;
    ++depth_;
    try {
      next();
    } catch (...) {
      --depth_;
      queue_.clear();
      throw;
    }
    --depth_;
    ++actions_run_;
    if (is_first) first = action_firings_;
    is_first = false;
  }
  return first;
}

std::size_t LinkGraph::brush(std::string_view name, std::span<const std::size_t> ids,
                             HighlightMode mode) {
  AttributeTable& t = table(name);
  std::vector<std::size_t> copy(ids.begin(), ids.end());
  return run([&t, copy = std::move(copy), mode] { self_link(t, copy, mode); });
}

std::size_t LinkGraph::clear_brush(std::string_view name) {
  AttributeTable& t = table(name);
  return run([&t] { t.select({}); });
}

std::size_t LinkGraph::recolor(std::string_view name, std::span<const std::size_t> ids,
                               const std::string& color) {
  AttributeTable& t = table(name);
  std::vector<std::size_t> copy(ids.begin(), ids.end());
  return run([&t, copy = std::move(copy), color] {
    AttributePatch patch;
    patch.color = color;
    t.set_attributes(copy, patch);
  });
}

}  // namespace chronofold
