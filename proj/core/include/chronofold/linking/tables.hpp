#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chronofold/model/attribute_table.hpp"
#include "chronofold/model/reactive_table.hpp"

namespace chronofold {

/// Wide view of a long table: one row per distinct time label (in time
/// order) and one numeric column per variable. Linkable by "time".
class WideTable : public AttributeTable {
 public:
  static WideTable from_long(const ReactiveTable& table, std::string name = "wide");

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& time_labels() const { return labels_; }
  const std::vector<std::string>& columns() const { return columns_; }
  /// Value of `column` at `row`; NaN where the long table has no record.
  double value(std::size_t row, std::size_t column) const;

  std::optional<std::vector<std::string>> key_column(std::string_view name) const override;
  std::vector<std::string> key_column_names() const override;

 private:
  WideTable(std::string name, std::size_t rows);

  std::vector<std::string> labels_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> values_;  // [column][row]
};

/// One row per distinct value of a key column (a categorical view or a
/// histogram's bins), in order of first appearance unless `order` is given.
class CategoryTable : public AttributeTable {
 public:
  static CategoryTable from_column(const AttributeTable& source, std::string_view column,
                                   std::string name,
                                   std::vector<std::string> order = {});

  const std::string& column() const { return column_; }
  const std::vector<std::string>& categories() const { return categories_; }
  /// Number of source rows per category.
  const std::vector<std::size_t>& counts() const { return counts_; }

  std::optional<std::vector<std::string>> key_column(std::string_view name) const override;
  std::vector<std::string> key_column_names() const override;

 private:
  CategoryTable(std::string name, std::size_t rows);

  std::string column_;
  std::vector<std::string> categories_;
  std::vector<std::size_t> counts_;
};

/// Equal-width bin labels "[lo,hi)" for `values`; the last bin is closed.
/// Returns the per-value label and the ordered list of bin labels.
struct Binning {
  std::vector<std::string> labels;
  std::vector<std::string> bins;
};
Binning histogram_bins(const std::vector<double>& values, std::size_t bin_count);

}  // namespace chronofold
