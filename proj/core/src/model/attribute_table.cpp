#include "chronofold/model/attribute_table.hpp"

#include <algorithm>
#include <map>

namespace chronofold {

void AttributePatch::apply_to(PointAttributes& attrs) const {
  if (brushed) attrs.brushed = *brushed;
  if (color) attrs.color = *color;
  if (size) attrs.size = *size;
  if (visible) attrs.visible = *visible;
}

struct AttributeTable::Subscription::Registry {
  std::map<std::uint64_t, Listener> listeners;
  std::uint64_t next_id = 1;
};

AttributeTable::Subscription& AttributeTable::Subscription::operator=(
    Subscription&& other) noexcept {
  if (this != &other) {
    reset();
    registry_ = std::move(other.registry_);
    id_ = other.id_;
    other.registry_.reset();
  }
  return *this;
}

AttributeTable::Subscription::~Subscription() { reset(); }

void AttributeTable::Subscription::reset() {
  if (auto registry = registry_.lock()) {
    registry->listeners.erase(id_);
  }
  registry_.reset();
}

AttributeTable::AttributeTable(std::string name, std::vector<PointAttributes> initial)
    : name_(std::move(name)),
      initial_(initial),
      attributes_(std::move(initial)),
      registry_(std::make_shared<Subscription::Registry>()) {}

std::vector<std::size_t> AttributeTable::brushed_rows() const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].brushed) rows.push_back(i);
  }
  return rows;
}

std::optional<ChangeEvent> AttributeTable::set_attributes(std::span<const std::size_t> ids,
                                                          const AttributePatch& patch) {
  if (ids.empty() || patch.empty()) return std::nullopt;

  ChangeEvent event;
  event.sequence = next_sequence_++;
  event.patch = patch;
  for (std::size_t id : ids) {
    if (id < attributes_.size()) {
      event.rows.push_back(id);
    } else {
      event.unknown_ids.push_back(id);
    }
  }
  std::sort(event.rows.begin(), event.rows.end());
  event.rows.erase(std::unique(event.rows.begin(), event.rows.end()), event.rows.end());
  for (std::size_t row : event.rows) patch.apply_to(attributes_[row]);

  dispatch(event);
  return event;
}

std::optional<ChangeEvent> AttributeTable::select(std::span<const std::size_t> ids) {
  ChangeEvent event;
  std::vector<bool> wanted(attributes_.size(), false);
  for (std::size_t id : ids) {
    if (id < attributes_.size()) {
      wanted[id] = true;
    } else {
      event.unknown_ids.push_back(id);
    }
  }
  for (std::size_t row = 0; row < attributes_.size(); ++row) {
    if (wanted[row] && !attributes_[row].brushed) event.rows.push_back(row);
    if (!wanted[row] && attributes_[row].brushed) event.cleared.push_back(row);
  }
  if (event.rows.empty() && event.cleared.empty() && event.unknown_ids.empty()) {
    return std::nullopt;
  }
  event.sequence = next_sequence_++;
  event.patch.brushed = true;
  for (std::size_t row : event.rows) attributes_[row].brushed = true;
  for (std::size_t row : event.cleared) attributes_[row].brushed = false;
  dispatch(event);
  return event;
}

void AttributeTable::dispatch(const ChangeEvent& event) {
  log_.push_back(event);

  // Snapshot ids first: listeners may subscribe or unsubscribe while running.
  std::vector<std::uint64_t> ids_to_call;
  ids_to_call.reserve(registry_->listeners.size());
  for (const auto& [id, _] : registry_->listeners) ids_to_call.push_back(id);
  auto registry = registry_;
  for (std::uint64_t id : ids_to_call) {
    auto it = registry->listeners.find(id);
    if (it == registry->listeners.end()) continue;
    Listener listener = it->second;
    listener(event);
  }
}

AttributeTable::Subscription AttributeTable::subscribe(Listener listener) {
  const std::uint64_t id = registry_->next_id++;
  registry_->listeners.emplace(id, std::move(listener));
  return Subscription(registry_, id);
}

std::size_t AttributeTable::listener_count() const { return registry_->listeners.size(); }

std::vector<PointAttributes> AttributeTable::replay(std::vector<PointAttributes> initial,
                                                    std::span<const ChangeEvent> log) {
  for (const ChangeEvent& event : log) {
    for (std::size_t row : event.rows) {
      if (row < initial.size()) event.patch.apply_to(initial[row]);
    }
    for (std::size_t row : event.cleared) {
      if (row < initial.size()) initial[row].brushed = false;
    }
  }
  return initial;
}

std::optional<std::vector<std::string>> AttributeTable::key_column(std::string_view name) const {
  for (const auto& [column, values] : extra_columns_) {
    if (column == name) return values;
  }
  return std::nullopt;
}

std::vector<std::string> AttributeTable::key_column_names() const {
  std::vector<std::string> names;
  for (const auto& [column, _] : extra_columns_) names.push_back(column);
  return names;
}

void AttributeTable::add_key_column(std::string name, std::vector<std::string> values) {
  if (values.size() != attributes_.size()) {
    throw std::invalid_argument("key column '" + name + "' has wrong length");
  }
  for (auto& [column, existing] : extra_columns_) {
    if (column == name) {
      existing = std::move(values);
      return;
    }
  }
  extra_columns_.emplace_back(std::move(name), std::move(values));
}

}  // namespace chronofold
