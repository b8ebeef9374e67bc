#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chronofold/model/record.hpp"

namespace chronofold {

/// Row attributes with batched change notification.
///
/// Every successful `set_attributes` call produces exactly one ChangeEvent,
/// appended to the event log and delivered synchronously to all listeners.
/// Listeners may mutate this or other tables from inside the callback.
class AttributeTable {
 public:
  using Listener = std::function<void(const ChangeEvent&)>;

  /// Keeps a listener registered; unregisters on destruction.
  class Subscription {
   public:
    Subscription() = default;
    Subscription(Subscription&&) noexcept = default;
    Subscription& operator=(Subscription&& other) noexcept;
    Subscription(const Subscription&) = delete;
    Subscription& operator=(const Subscription&) = delete;
    ~Subscription();

    void reset();
    bool active() const { return !registry_.expired(); }

   private:
    friend class AttributeTable;
    struct Registry;
    Subscription(std::weak_ptr<Registry> registry, std::uint64_t id)
        : registry_(std::move(registry)), id_(id) {}

    std::weak_ptr<Registry> registry_;
    std::uint64_t id_ = 0;
  };

  AttributeTable(std::string name, std::vector<PointAttributes> initial);
  virtual ~AttributeTable() = default;

  AttributeTable(AttributeTable&&) noexcept = default;
  AttributeTable& operator=(AttributeTable&&) noexcept = default;
  AttributeTable(const AttributeTable&) = delete;
  AttributeTable& operator=(const AttributeTable&) = delete;

  const std::string& name() const { return name_; }
  std::size_t row_count() const { return attributes_.size(); }

  const PointAttributes& attributes(std::size_t row) const { return attributes_.at(row); }
  std::span<const PointAttributes> attributes() const { return attributes_; }
  std::vector<std::size_t> brushed_rows() const;

  /// Applies `patch` to `ids`. Returns nullopt (and emits nothing) when ids
  /// is empty or the patch sets no field; unknown ids are reported in the
  /// event instead of raising.
  std::optional<ChangeEvent> set_attributes(std::span<const std::size_t> ids,
                                            const AttributePatch& patch);

  /// Replaces the brushed set with `ids` in a single event: newly selected
  /// rows are in `rows`, deselected rows in `cleared`. Returns nullopt when
  /// the brushed set is unchanged and no id is unknown.
  std::optional<ChangeEvent> select(std::span<const std::size_t> ids);

  Subscription subscribe(Listener listener);
  std::size_t listener_count() const;

  const std::vector<ChangeEvent>& event_log() const { return log_; }
  const std::vector<PointAttributes>& initial_attributes() const { return initial_; }

  /// Rebuilds attribute rows by applying `log` to `initial`.
  static std::vector<PointAttributes> replay(std::vector<PointAttributes> initial,
                                             std::span<const ChangeEvent> log);

  /// Values of a categorical column usable as a linking variable, one per row.
  virtual std::optional<std::vector<std::string>> key_column(std::string_view name) const;
  virtual std::vector<std::string> key_column_names() const;

  void add_key_column(std::string name, std::vector<std::string> values);

 private:
  void dispatch(const ChangeEvent& event);

  std::string name_;
  std::vector<PointAttributes> initial_;
  std::vector<PointAttributes> attributes_;
  std::vector<ChangeEvent> log_;
  std::uint64_t next_sequence_ = 1;
  std::shared_ptr<Subscription::Registry> registry_;
  std::vector<std::pair<std::string, std::vector<std::string>>> extra_columns_;
};

}  // namespace chronofold
