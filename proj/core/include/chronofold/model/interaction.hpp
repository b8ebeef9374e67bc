#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace chronofold {

enum class InteractionKind {
  wrapX,
  wrapY,
  facetIndividual,
  facetVariable,
  facetPeriod,
  mirror,
  shiftX,
};

inline constexpr std::array<InteractionKind, 7> kAllInteractionKinds = {
    InteractionKind::wrapX,         InteractionKind::wrapY,
    InteractionKind::facetIndividual, InteractionKind::facetVariable,
    InteractionKind::facetPeriod,   InteractionKind::mirror,
    InteractionKind::shiftX,
};

std::string_view to_string(InteractionKind kind);

using SnapshotId = std::size_t;

/// One entry of the interaction stream.
///
/// `params` is the parameter vector p_i and `inputs` the user input u_ij;
/// their layout per kind is fixed by the index constants below.
struct InteractionRecord {
  InteractionKind kind = InteractionKind::wrapX;
  int j = 0;
  std::vector<double> params;
  std::vector<double> inputs;
  std::optional<SnapshotId> snapshot;
};

namespace wrap_param {
inline constexpr std::size_t stop = 0;    // minimum segment size p_i1
inline constexpr std::size_t period = 1;  // p_i2, 0 when unused
inline constexpr std::size_t speed = 2;   // p_i3, 0 for regular wrapping
}  // namespace wrap_param
namespace wrap_input {
inline constexpr std::size_t points = 0;  // points cropped by this step (negative: unwrap)
}
namespace facet_param {
inline constexpr std::size_t step = 0;  // lift per keystroke, individual faceting only
}
namespace mirror_param {
inline constexpr std::size_t divider = 0;  // static_cast<double>(Divider)
}
namespace shift_input {
inline constexpr std::size_t drag_start = 0;
inline constexpr std::size_t drag_end = 1;
inline constexpr std::size_t group = 2;
}  // namespace shift_input

/// Ordered interaction records plus the line-group snapshots they reference.
class InteractionStream {
 public:
  const std::vector<InteractionRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }

  SnapshotId store_snapshot(std::vector<int> groups);
  const std::vector<int>* snapshot(SnapshotId id) const;
  void drop_snapshot(SnapshotId id);

  /// Appends a record, assigning the next j for its kind.
  const InteractionRecord& push(InteractionRecord record);

  int last_j(InteractionKind kind) const;
  void clear();

 private:
  std::vector<InteractionRecord> records_;
  std::map<SnapshotId, std::vector<int>> snapshots_;
  std::map<InteractionKind, int> counters_;
  SnapshotId next_snapshot_ = 1;
};

}  // namespace chronofold
