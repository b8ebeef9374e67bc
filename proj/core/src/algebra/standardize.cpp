#include "chronofold/algebra/standardize.hpp"

#include <limits>
#include <map>
#include <stdexcept>

namespace chronofold {

std::vector<double> standardize_lines(std::span<const double> y, std::span<const int> groups) {
  if (y.size() != groups.size()) throw std::invalid_argument("standardize: length mismatch");
  std::map<int, std::pair<double, double>> range;
  for (std::size_t i = 0; i < y.size(); ++i) {
    auto [it, inserted] = range.try_emplace(groups[i], y[i], y[i]);
    if (!inserted) {
      it->second.first = std::min(it->second.first, y[i]);
      it->second.second = std::max(it->second.second, y[i]);
    }
  }
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const auto [lo, hi] = range.at(groups[i]);
    out[i] = hi > lo ? (y[i] - lo) / (hi - lo) : 0.5;
  }
  return out;
}

}  // namespace chronofold
