#include <gtest/gtest.h>

#include "chronofold/model/attribute_table.hpp"
#include "chronofold/model/coordinate_state.hpp"
#include "chronofold/model/errors.hpp"
#include "chronofold/model/interaction.hpp"
#include "chronofold/model/reactive_table.hpp"
#include "fixtures.hpp"

namespace cf = chronofold;
using cf::testing::grid_records;
using cf::testing::single_series;

namespace {

cf::AttributeTable small_table(std::size_t n = 4) {
  cf::PointAttributes a;
  a.color = "#000000";
  return cf::AttributeTable("t", std::vector<cf::PointAttributes>(n, a));
}

}  // namespace

TEST(AttributeTable, OneEventPerBatchedUpdate) {
  auto table = small_table();
  int calls = 0;
  std::vector<std::size_t> seen;
  auto sub = table.subscribe([&](const cf::ChangeEvent& e) {
    ++calls;
    seen = e.rows;
  });
  cf::AttributePatch patch;
  patch.brushed = true;
  const std::vector<std::size_t> ids{2, 0, 2};
  auto event = table.set_attributes(ids, patch);
  ASSERT_TRUE(event);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(seen, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(table.brushed_rows(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(table.event_log().size(), 1u);
}

TEST(AttributeTable, EmptyIdsOrPatchEmitNothing) {
  auto table = small_table();
  int calls = 0;
  auto sub = table.subscribe([&](const cf::ChangeEvent&) { ++calls; });
  cf::AttributePatch patch;
  patch.brushed = true;
  EXPECT_FALSE(table.set_attributes({}, patch));
  const std::vector<std::size_t> ids{1};
  EXPECT_FALSE(table.set_attributes(ids, cf::AttributePatch{}));
  EXPECT_EQ(calls, 0);
  EXPECT_TRUE(table.event_log().empty());
}

TEST(AttributeTable, UnknownIdsAreReportedNotRaised) {
  auto table = small_table(3);
  cf::AttributePatch patch;
  patch.color = "#ffffff";
  const std::vector<std::size_t> ids{1, 9};
  auto event = table.set_attributes(ids, patch);
  ASSERT_TRUE(event);
  EXPECT_EQ(event->rows, (std::vector<std::size_t>{1}));
  EXPECT_EQ(event->unknown_ids, (std::vector<std::size_t>{9}));
  EXPECT_EQ(table.attributes(1).color, "#ffffff");
}

TEST(AttributeTable, SubscriptionEndsWithItsHandle) {
  auto table = small_table();
  int calls = 0;
  {
    auto sub = table.subscribe([&](const cf::ChangeEvent&) { ++calls; });
    EXPECT_EQ(table.listener_count(), 1u);
  }
  EXPECT_EQ(table.listener_count(), 0u);
  const std::vector<std::size_t> ids{0};
  table.select(ids);
  EXPECT_EQ(calls, 0);
}

TEST(AttributeTable, SelectReplacesSelectionInOneEvent) {
  auto table = small_table(5);
  const std::vector<std::size_t> first{0, 1};
  const std::vector<std::size_t> second{1, 3};
  table.select(first);
  auto event = table.select(second);
  ASSERT_TRUE(event);
  EXPECT_EQ(event->rows, (std::vector<std::size_t>{3}));
  EXPECT_EQ(event->cleared, (std::vector<std::size_t>{0}));
  EXPECT_EQ(table.brushed_rows(), second);
  EXPECT_FALSE(table.select(second));
}

TEST(AttributeTable, ReplayOfLogReproducesAttributes) {
  auto table = small_table(6);
  cf::AttributePatch red;
  red.color = "#ff0000";
  const std::vector<std::size_t> a{1, 4}, b{2, 5}, c{0};
  table.set_attributes(a, red);
  table.select(b);
  table.select(c);
  const auto rebuilt = cf::AttributeTable::replay(table.initial_attributes(), table.event_log());
  EXPECT_EQ(rebuilt, std::vector<cf::PointAttributes>(table.attributes().begin(),
                                                      table.attributes().end()));
}

TEST(AttributeTable, ListenerMayMutateAnotherTable) {
  auto a = small_table(3);
  auto b = small_table(3);
  auto sub = a.subscribe([&](const cf::ChangeEvent& e) { b.select(e.rows); });
  const std::vector<std::size_t> ids{2};
  a.select(ids);
  EXPECT_EQ(b.brushed_rows(), ids);
}

TEST(ReactiveTable, RegularSeriesUseRankAsX0) {
  auto table = cf::ReactiveTable::ingest(single_series({5, 3, 8, 1}));
  const auto& c = table.coords();
  EXPECT_EQ(c.x0, (std::vector<double>{1, 2, 3, 4}));
  EXPECT_EQ(c.y0, (std::vector<double>{5, 3, 8, 1}));
  EXPECT_EQ(c.x, c.x0);
  EXPECT_EQ(c.y, c.y0);
  EXPECT_FALSE(table.irregular());
}

TEST(ReactiveTable, IrregularSeriesKeepTimeGaps) {
  std::vector<cf::TemporalRecord> records;
  for (double t : {10.0, 11.0, 15.0, 16.0}) {
    cf::TemporalRecord r;
    r.time = t;
    r.variable = "v";
    r.value = t;
    records.push_back(r);
  }
  auto table = cf::ReactiveTable::ingest(records);
  EXPECT_TRUE(table.irregular());
  EXPECT_EQ(table.coords().x0, (std::vector<double>{1, 2, 6, 7}));
}

TEST(ReactiveTable, GroupsFollowFirstAppearance) {
  auto table = cf::ReactiveTable::ingest(
      grid_records({"b", "a"}, {"i1", "i2"}, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 1, 2}}));
  const auto& g = table.coords().groups;
  EXPECT_EQ(table.series_count(), 4u);
  EXPECT_EQ(table.variables(), (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(g.variable[0], 1);
  EXPECT_EQ(g.variable[6], 2);
  EXPECT_EQ(g.individual[3], 2);
  EXPECT_EQ(g.series[9], 4);
  EXPECT_EQ(table.series_name(3), "a/i2");
  EXPECT_EQ(cf::count_groups(g.line), 4u);
  EXPECT_EQ(table.attributes(0).color, std::string(cf::qualitative_palette()[0]));
  EXPECT_EQ(table.attributes(6).color, std::string(cf::qualitative_palette()[1]));
}

TEST(ReactiveTable, RejectsDuplicateTriple) {
  auto records = single_series({1, 2, 3});
  records.push_back(records[1]);
  try {
    cf::ReactiveTable::ingest(records);
    FAIL() << "duplicate accepted";
  } catch (const cf::IngestError& e) {
    EXPECT_EQ(e.key(), "(2, y)");
  }
}

TEST(ReactiveTable, RejectsShortSeriesAndBadValues) {
  EXPECT_THROW(cf::ReactiveTable::ingest(single_series({1, 2})), cf::IngestError);
  EXPECT_THROW(cf::ReactiveTable::ingest({}), cf::IngestError);
  auto records = single_series({1, 2, 3});
  records[1].value = std::nan("");
  EXPECT_THROW(cf::ReactiveTable::ingest(records), cf::IngestError);
}

TEST(ReactiveTable, KeyColumns) {
  auto records = single_series({1, 2, 3});
  records[0].columns["region"] = "north";
  auto table = cf::ReactiveTable::ingest(records);
  EXPECT_EQ(*table.key_column("time"), (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_EQ(*table.key_column("variable"), (std::vector<std::string>{"y", "y", "y"}));
  EXPECT_EQ(*table.key_column("region"), (std::vector<std::string>{"north", "", ""}));
  EXPECT_FALSE(table.key_column("nope"));
}

TEST(CoordinateState, LineIdsAreDenseOverSeriesBaseWrap) {
  cf::LineGroups g;
  g.series = {1, 1, 1, 2, 2, 2};
  g.base = {1, 1, 1, 1, 1, 1};
  g.wrap = {1, 2, 2, 1, 1, 3};
  cf::refresh_line_groups(g);
  EXPECT_EQ(g.line, (std::vector<int>{1, 2, 2, 3, 3, 4}));
}

TEST(CoordinateState, SegmentsFollowTimeWithinLines) {
  cf::LineGroups g;
  g.variable = g.individual = g.series = {1, 1, 1, 1};
  auto s = cf::CoordinateState::initial({3, 1, 2, 4}, {0, 0, 0, 0}, g);
  const auto pairs = cf::segment_pairs(s);
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(pairs[0], (std::pair<std::size_t, std::size_t>{1, 2}));
  EXPECT_EQ(pairs[1], (std::pair<std::size_t, std::size_t>{2, 0}));
  EXPECT_EQ(pairs[2], (std::pair<std::size_t, std::size_t>{0, 3}));
}

TEST(CoordinateState, ValidateCatchesLengthMismatch) {
  cf::LineGroups g;
  g.variable = g.individual = g.series = {1, 1, 1};
  auto s = cf::CoordinateState::initial({1, 2, 3}, {0, 0, 0}, g);
  EXPECT_NO_THROW(s.validate());
  s.y.pop_back();
  EXPECT_THROW(s.validate(), cf::Error);
}

TEST(InteractionStream, CountersArePerKind) {
  cf::InteractionStream stream;
  cf::InteractionRecord wrap;
  wrap.kind = cf::InteractionKind::wrapX;
  cf::InteractionRecord mirror;
  mirror.kind = cf::InteractionKind::mirror;
  EXPECT_EQ(stream.push(wrap).j, 1);
  EXPECT_EQ(stream.push(wrap).j, 2);
  EXPECT_EQ(stream.push(mirror).j, 1);
  EXPECT_EQ(stream.last_j(cf::InteractionKind::wrapX), 2);
  const auto id = stream.store_snapshot({1, 2});
  ASSERT_NE(stream.snapshot(id), nullptr);
  stream.drop_snapshot(id);
  EXPECT_EQ(stream.snapshot(id), nullptr);
}
