#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "chronofold/algebra/interactor.hpp"
#include "chronofold/layers/aspect.hpp"
#include "chronofold/layers/layers.hpp"
#include "chronofold/layers/svg.hpp"
#include "chronofold/linking/polygon_link.hpp"
#include "chronofold/model/errors.hpp"
#include "chronofold/model/reactive_table.hpp"
#include "fixtures.hpp"

namespace cf = chronofold;

namespace {

std::size_t expected_segments(const cf::CoordinateState& s) {
  std::map<int, std::size_t> sizes;
  for (int l : s.groups.line) ++sizes[l];
  std::size_t total = 0;
  for (const auto& [_, n] : sizes) total += n - 1;
  return total;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Layers, SegmentCountIsPointsMinusLines) {
  auto table = cf::ReactiveTable::ingest(cf::testing::lynx_records());
  auto& s = table.coords();
  cf::Interactor ia(s);
  for (int k = 0; k < 5; ++k) {
    const auto layers = cf::build_layers(s, table.attributes(), cf::RenderMode::line);
    EXPECT_EQ(layers.lines.size(), s.size() - cf::count_groups(s.groups.line));
    EXPECT_EQ(layers.lines.size(), expected_segments(s));
    EXPECT_TRUE(layers.areas.empty());
    const auto areas = cf::build_layers(s, table.attributes(), cf::RenderMode::area);
    EXPECT_EQ(areas.areas.size(), layers.lines.size());
    EXPECT_TRUE(areas.lines.empty());
    ia.wrap_x(20);
  }
}

TEST(Layers, SingletonLinesHaveNoSegments) {
  auto table = cf::ReactiveTable::ingest(cf::testing::single_series({1, 2, 3, 4, 5, 6, 7}));
  auto& s = table.coords();
  cf::Interactor ia(s);
  ia.wrap_x(1);  // span 6: point 7 wraps alone
  EXPECT_EQ(cf::count_groups(s.groups.line), 2u);
  const auto layers = cf::build_layers(s, table.attributes(), cf::RenderMode::line);
  EXPECT_EQ(layers.lines.size(), 5u);
  for (const auto& seg : layers.lines) EXPECT_EQ(s.groups.line[seg.from], s.groups.line[seg.to]);
}

TEST(Layers, SegmentColorFollowsEarlierEndpoint) {
  auto table = cf::ReactiveTable::ingest(cf::testing::single_series({1, 2, 3, 4}));
  const std::vector<std::size_t> row{1};
  cf::AttributePatch patch;
  patch.color = "#123456";
  table.set_attributes(row, patch);
  const auto layers = cf::build_layers(table.coords(), table.attributes(), cf::RenderMode::line);
  ASSERT_EQ(layers.lines.size(), 3u);
  EXPECT_NE(layers.lines[0].color, "#123456");
  EXPECT_EQ(layers.lines[1].color, "#123456");
  EXPECT_NE(layers.lines[2].color, "#123456");
}

TEST(Layers, PolygonsCloseToPanelMinimum) {
  auto table = cf::ReactiveTable::ingest(
      cf::testing::grid_records({"a", "b"}, {""}, {{0.2, 0.8, 0.5}, {0.3, 0.1, 0.9}}));
  auto& s = table.coords();
  cf::Interactor ia(s);
  ia.facet_variable();
  const auto layers = cf::build_layers(s, table.attributes(), cf::RenderMode::area);
  ASSERT_EQ(layers.areas.size(), 4u);
  for (const auto& poly : layers.areas) {
    const double base = poly.vertices[2].y;
    EXPECT_EQ(poly.vertices[3].y, base);
    const bool upper = s.y[*poly.source_point] >= 1.0;
    EXPECT_NEAR(base, upper ? 1.1 : 0.2, 1e-12);
  }
  EXPECT_EQ(cf::polygons_of_point(layers, 3), (std::vector<std::size_t>{2}));
  EXPECT_EQ(cf::source_of_polygon(layers, 3), 4u);
  EXPECT_THROW(cf::source_of_polygon(layers, 4), cf::LinkError);
}

TEST(Layers, BrushLayerFollowsBrushedPoints) {
  auto table = cf::ReactiveTable::ingest(cf::testing::single_series({1, 2, 3, 4, 5}));
  const std::vector<std::size_t> rows{2};
  table.select(rows);
  const auto lines = cf::build_layers(table.coords(), table.attributes(), cf::RenderMode::line);
  EXPECT_EQ(lines.brush.points, rows);
  EXPECT_EQ(lines.brush.segments, (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(lines.brush.polygons.empty());
  const auto areas = cf::build_layers(table.coords(), table.attributes(), cf::RenderMode::area);
  EXPECT_EQ(areas.brush.polygons, (std::vector<std::size_t>{2}));
}

TEST(Layers, HiddenPointsAreNotDrawn) {
  auto table = cf::ReactiveTable::ingest(cf::testing::single_series({1, 2, 3}));
  const std::vector<std::size_t> row{0};
  cf::AttributePatch patch;
  patch.visible = false;
  table.set_attributes(row, patch);
  const auto layers = cf::build_layers(table.coords(), table.attributes(), cf::RenderMode::line);
  EXPECT_EQ(layers.points.ids, (std::vector<std::size_t>{1, 2}));
}

TEST(Layers, YBandSplitsSegmentsAtCuts) {
  auto table = cf::ReactiveTable::ingest(cf::testing::single_series({0.2, 0.9, 0.3}));
  auto& s = table.coords();
  cf::Interactor ia(s);
  ia.wrap_y(0.5);
  const auto layers = cf::build_layers(s, table.attributes(), cf::RenderMode::line);
  ASSERT_EQ(layers.lines.size(), 2u);
  EXPECT_EQ(layers.lines[0].pieces.size(), 2u);
  EXPECT_EQ(layers.lines[1].pieces.size(), 2u);
  const auto& cut = layers.lines[0].pieces[0];
  EXPECT_NEAR(cut.to.y, 0.5, 1e-12);
  EXPECT_NEAR(cut.to.x, 1.0 + 0.3 / 0.7, 1e-12);
  const auto areas = cf::build_layers(s, table.attributes(), cf::RenderMode::area);
  EXPECT_EQ(areas.areas.size(), 4u);
  for (const auto& p : areas.areas) EXPECT_EQ(p.source_point, p.segment == 0 ? 0u : 1u);
}

TEST(Layers, AxesCoverWrapLimits) {
  auto table = cf::ReactiveTable::ingest(cf::testing::lynx_records());
  cf::Interactor ia(table.coords());
  ia.wrap_x(75);
  const auto layers = cf::build_layers(table.coords(), table.attributes(), cf::RenderMode::line);
  EXPECT_LE(layers.axes.xmin, 1.0);
  EXPECT_GE(layers.axes.xmax, 39.0);
  EXPECT_FALSE(layers.axes.xticks.empty());
}

TEST(Layers, NiceTicksAreRoundAndInside) {
  const auto t = cf::nice_ticks(0.0, 97.0);
  ASSERT_FALSE(t.empty());
  for (double v : t) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 97.0);
    EXPECT_EQ(std::fmod(v, 10.0), 0.0);
  }
}

TEST(Layers, StatsArePanelMeans) {
  auto table = cf::ReactiveTable::ingest(
      cf::testing::grid_records({"a", "b"}, {""}, {{0.0, 1.0, 2.0}, {3.0, 3.0, 6.0}}));
  cf::LayerOptions opts;
  opts.stats = true;
  const auto layers =
      cf::build_layers(table.coords(), table.attributes(), cf::RenderMode::line, opts);
  ASSERT_EQ(layers.stats.size(), 1u);
  EXPECT_DOUBLE_EQ(layers.stats[0].y, 2.5);
}

TEST(Layers, BuildIsDeterministic) {
  auto table = cf::ReactiveTable::ingest(cf::testing::lynx_records());
  cf::Interactor ia(table.coords());
  ia.wrap_x(40);
  ia.facet_variable();
  const auto a = cf::build_layers(table.coords(), table.attributes(), cf::RenderMode::area);
  const auto b = cf::build_layers(table.coords(), table.attributes(), cf::RenderMode::area);
  EXPECT_EQ(a, b);
  EXPECT_EQ(cf::render_svg(a), cf::render_svg(b));
}

TEST(Aspect, BanksMedianSlope) {
  // Slopes 1 and -1 over a unit-aspect range bank to 1.
  auto table = cf::ReactiveTable::ingest(cf::testing::single_series({0, 1, 0, 1, 0}));
  const auto& s = table.coords();
  // median|dy/dx| = 1, Rx = 4, Ry = 1.
  EXPECT_DOUBLE_EQ(cf::initial_aspect(s), 4.0);
}

TEST(Aspect, ScaleInvariantInY) {
  std::mt19937_64 rng(7);
  const auto ys = cf::testing::random_values(rng, 40);
  std::vector<double> scaled;
  for (double y : ys) scaled.push_back(1000.0 * y - 3.0);
  auto a = cf::ReactiveTable::ingest(cf::testing::single_series(ys));
  auto b = cf::ReactiveTable::ingest(cf::testing::single_series(scaled));
  EXPECT_NEAR(cf::initial_aspect(a.coords()), cf::initial_aspect(b.coords()), 1e-9);
}

TEST(Aspect, FlatDataFallsBack) {
  auto table = cf::ReactiveTable::ingest(cf::testing::single_series({1, 1, 1}));
  EXPECT_EQ(cf::initial_aspect(table.coords()), cf::kDefaultAspect);
}

TEST(Svg, MatchesGolden) {
  auto table = cf::ReactiveTable::ingest(cf::testing::lynx_records());
  cf::Interactor ia(table.coords());
  ia.wrap_x(75);
  ia.facet_variable();
  const auto layers = cf::build_layers(table.coords(), table.attributes(), cf::RenderMode::line);
  cf::SvgOptions opts;
  opts.title = "lynx";
  const auto svg = cf::render_svg(layers, opts);
  const auto golden = cf::testing::golden_path("lynx_wrap75_facet.svg");
  if (std::getenv("CHRONOFOLD_UPDATE_GOLDEN")) {
    std::ofstream(golden, std::ios::binary) << svg;
  }
  EXPECT_EQ(svg, read_file(golden));
}

TEST(Svg, ContainsOneCirclePerPointAndBrush) {
  auto table = cf::ReactiveTable::ingest(cf::testing::single_series({1, 2, 3}));
  const std::vector<std::size_t> rows{1};
  table.select(rows);
  const auto layers = cf::build_layers(table.coords(), table.attributes(), cf::RenderMode::line);
  const auto svg = cf::render_svg(layers);
  std::size_t circles = 0;
  for (auto p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) {
    ++circles;
  }
  EXPECT_EQ(circles, 4u);
  EXPECT_NE(svg.find("#ffd700"), std::string::npos);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
}
