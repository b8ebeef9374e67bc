#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "chronofold/model/reactive_table.hpp"
#include "chronofold/session/ingest.hpp"

namespace chronofold::testing {

inline std::string data_path(const std::string& name) {
  return std::string(CHRONOFOLD_DATA_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
  return std::string(CHRONOFOLD_GOLDEN_DIR) + "/" + name;
}

inline std::vector<TemporalRecord> lynx_records() {
  return load_records(data_path("lynx.csv"), CsvLayout::wide);
}

/// One series per (variable, individual) pair, all sharing times 1..n.
inline std::vector<TemporalRecord> grid_records(
    const std::vector<std::string>& variables, const std::vector<std::string>& individuals,
    const std::vector<std::vector<double>>& values_per_series) {
  std::vector<TemporalRecord> out;
  std::size_t s = 0;
  for (const auto& v : variables) {
    for (const auto& ind : individuals) {
      const auto& ys = values_per_series.at(s++);
      for (std::size_t t = 0; t < ys.size(); ++t) {
        TemporalRecord r;
        r.time = static_cast<double>(t + 1);
        r.variable = v;
        r.individual = ind;
        r.value = ys[t];
        out.push_back(r);
      }
    }
  }
  return out;
}

inline std::vector<TemporalRecord> single_series(const std::vector<double>& ys,
                                                 const std::string& variable = "y") {
  return grid_records({variable}, {""}, {ys});
}

inline std::vector<double> random_values(std::mt19937_64& rng, std::size_t n, double lo = 0.0,
                                         double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(n);
  for (auto& v : out) v = dist(rng);
  return out;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace chronofold::testing
