#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chronofold/algebra/interactor.hpp"
#include "chronofold/layers/layers.hpp"
#include "chronofold/linking/link_graph.hpp"
#include "chronofold/linking/tables.hpp"
#include "chronofold/model/reactive_table.hpp"
#include "chronofold/session/command.hpp"
#include "chronofold/session/ingest.hpp"

namespace chronofold {

struct SessionOptions {
  std::size_t histogram_bins = 10;
  bool stats = false;
};

/// What a command changed.
struct CommandOutcome {
  std::vector<std::string> warnings;
  bool coordinates_changed = false;
  bool mode_changed = false;
  bool brush_changed = false;
};

struct ScriptOutcome {
  std::size_t applied = 0;
  std::vector<std::string> warnings;
  /// Set when a command failed; the session holds the state after the last
  /// valid command.
  std::optional<std::size_t> failed_index;
  std::string error;
  bool ok() const { return !failed_index; }
};

/// Original labels of the point nearest to a query location.
struct QueryResult {
  std::size_t point = 0;
  std::string time_label;
  std::string variable;
  std::string individual;
  double value = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Names of the linked views every session hosts.
namespace view {
inline constexpr std::string_view time_plot = "long";
inline constexpr std::string_view wide = "wide";
inline constexpr std::string_view histogram = "histogram";
inline constexpr std::string_view categories = "categories";
}  // namespace view

/// One loaded dataset with its linked views and interaction engine.
///
/// Every mutation, whether from a script, the CLI or the wire, goes through
/// apply(). The time plot is linked to the wide table by time, to a value
/// histogram by bin and to a categorical view by variable.
class Session {
 public:
  static Session from_records(std::vector<TemporalRecord> records, SessionOptions options = {});
  static Session from_csv(const std::filesystem::path& path,
                          CsvLayout layout = CsvLayout::automatic, SessionOptions options = {});

  Session(Session&&) noexcept;
  Session& operator=(Session&&) noexcept;
  ~Session();

  CommandOutcome apply(const Command& command);
  ScriptOutcome run(const std::vector<Command>& commands);
  /// Parses then runs; a parse error applies nothing.
  ScriptOutcome run_script(std::string_view text);

  /// Nearest visible point within `radius` of (x, y) in current coordinates.
  std::optional<QueryResult> query_at(double x, double y, double radius) const;

  LayerSet layers() const;
  RenderMode mode() const { return mode_; }
  /// Banked width:height ratio computed at load.
  double aspect() const { return aspect_; }
  /// Incremented by every command that changed something.
  std::uint64_t version() const { return version_; }

  const ReactiveTable& table() const { return *long_; }
  const CoordinateState& coords() const { return long_->coords(); }
  const Interactor& interactor() const { return *interactor_; }
  const LinkGraph& links() const { return *links_; }
  const AttributeTable& view(std::string_view name) const { return links_->table(name); }
  std::vector<std::string> view_names() const;

  /// Replaces the baseline with exported coordinates: (x0, y0) := (x, y),
  /// line groups, brushed flags and colors taken from the export.
  void reload_baseline(const std::vector<double>& x, const std::vector<double>& y,
                       const std::vector<int>& lines, const std::vector<bool>& brushed,
                       const std::vector<std::string>& colors);

 private:
  Session() = default;
  void build_views();

  std::unique_ptr<ReactiveTable> long_;
  std::unique_ptr<WideTable> wide_;
  std::unique_ptr<CategoryTable> histogram_;
  std::unique_ptr<CategoryTable> categories_;
  std::unique_ptr<LinkGraph> links_;
  std::unique_ptr<Interactor> interactor_;
  SessionOptions options_;
  RenderMode mode_ = RenderMode::line;
  double aspect_ = 2.0;
  std::uint64_t version_ = 0;
};

}  // namespace chronofold
