#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "chronofold/linking/self_link.hpp"
#include "chronofold/model/attribute_table.hpp"

namespace chronofold {

enum class LinkDirection { oneWay, twoWay };

/// Links two tables through a shared key column. A target row is brushed
/// when any source row with the same key is brushed.
struct LinkSpec {
  std::string source;
  std::string target;
  std::string variable;
  std::string target_variable;  // defaults to `variable`
  LinkDirection direction = LinkDirection::twoWay;
  bool propagate_color = false;
};

struct LinkStats {
  std::size_t firings = 0;
  std::size_t suppressed = 0;
};

/// Propagates brushing between registered tables.
///
/// Each link holds a guard raised while it propagates; a change arriving
/// at either end of a raised link is not sent back. Each link fires at most
/// once per user action, so one action costs at most link_count() firings.
/// User actions issued while a propagation is running are queued and run
/// after it settles.
class LinkGraph {
 public:
  LinkGraph() = default;
  LinkGraph(const LinkGraph&) = delete;
  LinkGraph& operator=(const LinkGraph&) = delete;

  /// Tables must outlive the graph. Names must be unique.
  void add_table(AttributeTable& table);
  AttributeTable& table(std::string_view name) const;
  bool has_table(std::string_view name) const;

  /// Throws LinkError for an unknown table or a missing key column.
  std::size_t add_link(LinkSpec spec);
  std::size_t link_count() const { return links_.size(); }
  const LinkSpec& link(std::size_t k) const { return links_.at(k)->spec; }
  const LinkStats& stats(std::size_t k) const { return links_.at(k)->stats; }

  /// Brushes `ids` (expanded by `mode`) in the named table, replacing its
  /// selection, and propagates. Returns the number of link firings this
  /// action caused (0 if it was queued).
  std::size_t brush(std::string_view table, std::span<const std::size_t> ids,
                    HighlightMode mode = HighlightMode::singlePoint);
  std::size_t clear_brush(std::string_view table);
  /// Sets the color of `ids`; propagates along links with propagate_color.
  std::size_t recolor(std::string_view table, std::span<const std::size_t> ids,
                      const std::string& color);

  bool propagating() const { return depth_ > 0; }
  std::size_t actions_run() const { return actions_run_; }

 private:
  struct Link {
    LinkSpec spec;
    AttributeTable* source = nullptr;
    AttributeTable* target = nullptr;
    std::vector<std::string> source_keys;
    std::vector<std::string> target_keys;
    bool guard = false;
    bool fired = false;
    LinkStats stats;
    std::vector<AttributeTable::Subscription> subscriptions;
  };

  class Guard {
   public:
    explicit Guard(bool& flag) : flag_(flag) { flag_ = true; }
    ~Guard() { flag_ = false; }
    Guard(const Guard&) = delete;
    Guard& operator=(const Guard&) = delete;

   private:
    bool& flag_;
  };

  void on_change(Link& link, bool forward, const ChangeEvent& event);
  std::size_t run(std::function<void()> action);

  std::vector<AttributeTable*> tables_;
  std::vector<std::unique_ptr<Link>> links_;
  std::deque<std::function<void()>> queue_;
  int depth_ = 0;
  std::size_t action_firings_ = 0;
  std::size_t actions_run_ = 0;
};

}  // namespace chronofold
