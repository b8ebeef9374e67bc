#include "chronofold/algebra/movement.hpp"

#include <algorithm>

#include "chronofold/model/errors.hpp"

namespace chronofold {

bool Movement::x_only() const {
  return std::all_of(dy.begin(), dy.end(), [](double v) { return v == 0.0; });
}

bool Movement::y_only() const {
  return std::all_of(dx.begin(), dx.end(), [](double v) { return v == 0.0; });
}

Movement& Movement::operator+=(const Movement& other) {
  if (dx.empty() && dy.empty()) {
    dx.assign(other.dx.size(), 0.0);
    dy.assign(other.dy.size(), 0.0);
  }
  if (other.dx.size() != dx.size() || other.dy.size() != dy.size()) {
    throw Error("movement length mismatch");
  }
  for (std::size_t i = 0; i < dx.size(); ++i) dx[i] += other.dx[i];
  for (std::size_t i = 0; i < dy.size(); ++i) dy[i] += other.dy[i];
  if (other.produced_by) produced_by = other.produced_by;
  return *this;
}

void Movement::apply_to(CoordinateState& state) const {
  if (dx.size() != state.size() || dy.size() != state.size()) {
    throw Error("movement length does not match coordinate state");
  }
  for (std::size_t i = 0; i < dx.size(); ++i) {
    state.x[i] += dx[i];
    state.y[i] += dy[i];
  }
}

}  // namespace chronofold
