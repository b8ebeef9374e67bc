#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chronofold/model/attribute_table.hpp"
#include "chronofold/model/coordinate_state.hpp"
#include "chronofold/model/record.hpp"

namespace chronofold {

/// Fixed qualitative palette, assigned to variables in order of appearance.
std::span<const std::string_view> qualitative_palette();

/// Long-format temporal table: records, their attributes and coordinates.
///
/// Rows keep the order they were ingested in, so row i is point id i. The
/// record count never changes after ingest.
class ReactiveTable : public AttributeTable {
 public:
  static constexpr std::size_t kMinSeriesLength = 3;

  /// Builds a table. Throws IngestError on an empty input, a duplicate
  /// (time, variable, individual) triple, a non-finite value or time, or a
  /// series shorter than kMinSeriesLength.
  static ReactiveTable ingest(std::vector<TemporalRecord> records,
                              std::string name = "long");

  std::size_t size() const { return records_.size(); }
  const TemporalRecord& record(std::size_t row) const { return records_.at(row); }
  const std::vector<TemporalRecord>& records() const { return records_; }

  const CoordinateState& coords() const { return coords_; }
  CoordinateState& coords() { return coords_; }

  /// True when any series is not equally spaced in time.
  bool irregular() const;
  bool series_irregular(std::size_t series) const { return irregular_.at(series); }

  std::size_t series_count() const { return series_names_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<std::string>& individuals() const { return individuals_; }
  /// "variable" or "variable/individual".
  const std::string& series_name(std::size_t series) const { return series_names_.at(series); }
  /// Rows of one series (0-based series index) in time order.
  const std::vector<std::size_t>& series_rows(std::size_t series) const {
    return series_rows_.at(series);
  }

  /// Label shown when querying: the original time label.
  const std::string& time_label(std::size_t row) const { return records_.at(row).time_label; }

  std::optional<std::vector<std::string>> key_column(std::string_view name) const override;
  std::vector<std::string> key_column_names() const override;

 private:
  ReactiveTable(std::string name, std::vector<PointAttributes> attrs)
      : AttributeTable(std::move(name), std::move(attrs)) {}

  std::vector<TemporalRecord> records_;
  CoordinateState coords_;
  std::vector<bool> irregular_;
  std::vector<std::string> variables_;
  std::vector<std::string> individuals_;
  std::vector<std::string> series_names_;
  std::vector<std::vector<std::size_t>> series_rows_;
};

}  // namespace chronofold
