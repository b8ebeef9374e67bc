#include <benchmark/benchmark.h>

#include <random>

#include "chronofold/algebra/baseline.hpp"
#include "chronofold/algebra/interactor.hpp"
#include "chronofold/layers/layers.hpp"
#include "chronofold/session/session.hpp"
#include "fixtures.hpp"

namespace cf = chronofold;

namespace {

std::vector<cf::TemporalRecord> long_series(std::size_t n) {
  std::mt19937_64 rng(1);
  return cf::testing::single_series(cf::testing::random_values(rng, n));
}

void BM_WrapKeystroke(benchmark::State& state) {
  auto table = cf::ReactiveTable::ingest(long_series(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    cf::Interactor ia(table.coords());
    ia.wrap_x(10);
    benchmark::DoNotOptimize(table.coords().x.data());
  }
  state.SetItemsProcessed(state.iterations() * 10);
}
BENCHMARK(BM_WrapKeystroke)->Arg(1000)->Arg(100000);

void BM_RecomputeBaseline(benchmark::State& state) {
  auto table = cf::ReactiveTable::ingest(long_series(static_cast<std::size_t>(state.range(0))));
  cf::Interactor ia(table.coords());
  ia.wrap_x(50);
  ia.facet_period();
  ia.mirror(cf::Divider::median);
  ia.shift_x(0.0, 2.0, 2);
  for (auto _ : state) {
    auto s = cf::recompute_baseline(table.coords(), ia.stream());
    benchmark::DoNotOptimize(s.y.data());
  }
}
BENCHMARK(BM_RecomputeBaseline)->Arg(1000)->Arg(100000);

void BM_BuildLayers(benchmark::State& state) {
  auto table = cf::ReactiveTable::ingest(long_series(static_cast<std::size_t>(state.range(0))));
  cf::Interactor ia(table.coords());
  ia.wrap_x(50);
  const auto mode = state.range(1) ? cf::RenderMode::area : cf::RenderMode::line;
  for (auto _ : state) {
    auto layers = cf::build_layers(table.coords(), table.attributes(), mode);
    benchmark::DoNotOptimize(layers.points.ids.data());
  }
}
BENCHMARK(BM_BuildLayers)->Args({10000, 0})->Args({10000, 1});

void BM_BrushPropagation(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<std::vector<double>> values;
  for (int k = 0; k < 20; ++k) values.push_back(cf::testing::random_values(rng, 500));
  std::vector<std::string> individuals;
  for (int k = 0; k < 10; ++k) individuals.push_back("i" + std::to_string(k));
  auto session =
      cf::Session::from_records(cf::testing::grid_records({"a", "b"}, individuals, values));
  std::size_t k = 0;
  for (auto _ : state) {
    cf::cmd::Brush b;
    b.mode = cf::HighlightMode::sameTime;
    b.ids = {k++ % session.table().size()};
    session.apply(b);
  }
}
BENCHMARK(BM_BrushPropagation);

}  // namespace

BENCHMARK_MAIN();
