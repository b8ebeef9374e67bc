#include "chronofold/model/interaction.hpp"

namespace chronofold {

std::string_view to_string(InteractionKind kind) {
  switch (kind) {
    case InteractionKind::wrapX: return "wrapX";
    case InteractionKind::wrapY: return "wrapY";
    case InteractionKind::facetIndividual: return "facetIndividual";
    case InteractionKind::facetVariable: return "facetVariable";
    case InteractionKind::facetPeriod: return "facetPeriod";
    case InteractionKind::mirror: return "mirror";
    case InteractionKind::shiftX: return "shiftX";
  }
  return "unknown";
}

SnapshotId InteractionStream::store_snapshot(std::vector<int> groups) {
  const SnapshotId id = next_snapshot_++;
  snapshots_.emplace(id, std::move(groups));
  return id;
}

const std::vector<int>* InteractionStream::snapshot(SnapshotId id) const {
  auto it = snapshots_.find(id);
  return it == snapshots_.end() ? nullptr : &it->second;
}

void InteractionStream::drop_snapshot(SnapshotId id) { snapshots_.erase(id); }

const InteractionRecord& InteractionStream::push(InteractionRecord record) {
  record.j = ++counters_[record.kind];
  records_.push_back(std::move(record));
  return records_.back();
}

int InteractionStream::last_j(InteractionKind kind) const {
  auto it = counters_.find(kind);
  return it == counters_.end() ? 0 : it->second;
}

void InteractionStream::clear() {
  records_.clear();
  snapshots_.clear();
  counters_.clear();
}

}  // namespace chronofold
