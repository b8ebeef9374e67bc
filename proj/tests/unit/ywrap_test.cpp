#include <gtest/gtest.h>

#include <cmath>

#include "chronofold/algebra/ywrap.hpp"
#include "chronofold/model/errors.hpp"

namespace cf = chronofold;

namespace {

cf::CoordinateState series(std::vector<double> y) {
  cf::LineGroups g;
  g.variable = g.individual = g.series = std::vector<int>(y.size(), 1);
  std::vector<double> t(y.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<double>(i + 1);
  return cf::CoordinateState::initial(t, std::move(y), g);
}

}  // namespace

TEST(WrapY, ReducesIntoBandWithUpperBoundary) {
  EXPECT_DOUBLE_EQ(cf::wrap_y_value(0.2, 0.5), 0.2);
  EXPECT_DOUBLE_EQ(cf::wrap_y_value(0.9, 0.5), 0.4);
  EXPECT_DOUBLE_EQ(cf::wrap_y_value(0.5, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(cf::wrap_y_value(1.0, 0.5), 0.5);
  EXPECT_EQ(cf::wrap_y_value(0.0, 0.5), 0.0);
}

TEST(WrapY, CutVertexAtInterpolatedCrossing) {
  auto state = series({0.2, 0.9, 0.3});
  const auto r = cf::wrap_y(state, 0.5);
  ASSERT_TRUE(r.applied);
  EXPECT_DOUBLE_EQ(state.y[0] + r.movement.dy[0], 0.2);
  EXPECT_DOUBLE_EQ(state.y[1] + r.movement.dy[1], 0.4);
  EXPECT_TRUE(r.movement.y_only());
  ASSERT_EQ(r.cuts.size(), 2u);
  // Oracle: y(t) = ya + t (yb - ya) = 0.5.
  EXPECT_DOUBLE_EQ(r.cuts[0].t, (0.5 - 0.2) / (0.9 - 0.2));
  EXPECT_EQ(r.cuts[0].source_point, 0u);
  EXPECT_DOUBLE_EQ(r.cuts[1].t, (0.5 - 0.9) / (0.3 - 0.9));
  EXPECT_EQ(r.cuts[1].source_point, 1u);
}

TEST(WrapY, PiecesStayInsideTheBand) {
  const auto pieces = cf::y_pieces(0.1, 1.3, 0.5);
  ASSERT_EQ(pieces.size(), 3u);
  EXPECT_DOUBLE_EQ(pieces[0].y0, 0.1);
  EXPECT_DOUBLE_EQ(pieces[0].y1, 0.5);
  EXPECT_DOUBLE_EQ(pieces[1].y0, 0.0);
  EXPECT_DOUBLE_EQ(pieces[1].y1, 0.5);
  EXPECT_NEAR(pieces[2].y1, 0.3, 1e-12);
  EXPECT_DOUBLE_EQ(pieces.back().t1, 1.0);
}

TEST(WrapY, WideBandIsIdentityWithWarning) {
  auto state = series({0.1, 0.4, 0.3});
  const auto r = cf::wrap_y(state, 0.5);
  EXPECT_FALSE(r.applied);
  EXPECT_TRUE(r.movement.is_zero());
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(WrapY, RejectsNonPositiveBand) {
  auto state = series({0.1, 0.4, 0.3});
  EXPECT_THROW(cf::wrap_y(state, 0.0), cf::InteractionError);
  EXPECT_THROW(cf::wrap_y(state, -1.0), cf::InteractionError);
}
