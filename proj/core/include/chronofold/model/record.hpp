#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chronofold {

/// One long-format observation.
struct TemporalRecord {
  double time = 0.0;
  std::string time_label;  // original label, kept for querying; empty means "use time"
  std::string variable;
  std::string individual;  // empty means the single default group
  double value = 0.0;
  std::map<std::string, std::string> columns;  // extra per-record attributes
};

struct PointAttributes {
  bool brushed = false;
  std::string color;
  double size = 1.0;
  bool visible = true;

  friend bool operator==(const PointAttributes&, const PointAttributes&) = default;
};

/// A partial update; unset fields are left alone.
struct AttributePatch {
  std::optional<bool> brushed;
  std::optional<std::string> color;
  std::optional<double> size;
  std::optional<bool> visible;

  bool empty() const {
    return !brushed && !color && !size && !visible;
  }
  void apply_to(PointAttributes& attrs) const;
};

struct ChangeEvent {
  std::uint64_t sequence = 0;
  std::vector<std::size_t> rows;         // touched rows, ascending, unique
  std::vector<std::size_t> unknown_ids;  // ids that did not name a row
  AttributePatch patch;
  std::vector<std::size_t> cleared;      // rows un-brushed by a selection replacement
};

}  // namespace chronofold
