#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "chronofold/algebra/movement.hpp"

namespace chronofold {

/// y reduced into (0, band]; values on a cut line map to `band`, 0 stays 0.
double wrap_y_value(double y, double band);

/// Construction vertex where a segment crosses a cut line. Carries the id of
/// the segment's earlier endpoint for linking.
struct CutVertex {
  std::size_t from = 0;
  std::size_t to = 0;
  double t = 0.0;      // position along the segment, 0 at `from`
  double level = 0.0;  // the cut line crossed (pre-wrap y)
  std::size_t source_point = 0;
};

/// A piece of a segment lying inside one band, in band-local y.
struct YPiece {
  double t0 = 0.0;
  double t1 = 1.0;
  double y0 = 0.0;
  double y1 = 0.0;
};

/// Splits the segment ya -> yb at every cut line k·band strictly between them.
std::vector<YPiece> y_pieces(double ya, double yb, double band);
std::vector<double> cut_levels(double ya, double yb, double band);

struct YWrapResult {
  Movement movement;
  std::vector<CutVertex> cuts;
  std::vector<std::string> warnings;
  bool applied = false;
};

/// Wraps the current y of every point into bands of height `band`.
/// Throws InteractionError if band <= 0; band >= y-range is an identity.
YWrapResult wrap_y(const CoordinateState& state, double band);

}  // namespace chronofold
