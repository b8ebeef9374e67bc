#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chronofold/algebra/baseline.hpp"
#include "chronofold/algebra/interactor.hpp"
#include "chronofold/algebra/mirror.hpp"
#include "chronofold/layers/layers.hpp"
#include "chronofold/linking/link_graph.hpp"
#include "chronofold/linking/tables.hpp"
#include "chronofold/model/errors.hpp"
#include "chronofold/model/reactive_table.hpp"
#include "chronofold/session/command.hpp"
#include "chronofold/session/export.hpp"
#include "chronofold/session/host.hpp"
#include "chronofold/session/session.hpp"
#include "fixtures.hpp"

namespace cf = chronofold;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<void(Check&)> run;
};

// Composed faceting: facetVariable then facetIndividual on 2 variables x 3
// individuals reproduces the worked table.
void composed_facet(Check& c) {
  const std::vector<double> first{0.16, 0.33, 0.26, 0.84, 0.84, 0.90};
  const std::vector<double> expected{0.16, 1.33, 2.26, 3.84, 4.84, 5.90};
  std::vector<std::vector<double>> values;
  for (double f : first) values.push_back({f, 0.5, 0.7});
  auto session = cf::Session::from_records(
      cf::testing::grid_records({"V1", "V2"}, {"I1", "I2", "I3"}, values));
  const auto out = session.run_script("facetVar; facetInd 20");
  c.require(out.ok(), "script failed: " + out.error);
  const auto& s = session.coords();
  for (std::size_t k = 0; k < 6; ++k) {
    const double y = s.y[k * 3];
    c.require(std::abs(y - expected[k]) <= 1e-12,
              "series " + std::to_string(k) + ": y=" + std::to_string(y));
  }
}

// wrapX 75; facetVar on lynx moves every point by (-(l-1)*39, l-1).
void lynx_composition(Check& c) {
  auto session = cf::Session::from_records(cf::testing::lynx_records());
  const auto out = session.run_script("wrapX 75; facetVar");
  c.require(out.ok(), "script failed: " + out.error);
  const auto& s = session.coords();
  c.require(s.size() == 114, "lynx has " + std::to_string(s.size()) + " points");
  std::set<int> cycles;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int l = s.groups.wrap[i];
    cycles.insert(l);
    const double dx = s.x[i] - s.x0[i];
    const double dy = s.y[i] - s.y0[i];
    c.require(dx == -(l - 1) * 39.0 && dy == static_cast<double>(l - 1),
              "point " + std::to_string(i) + " moved by (" + std::to_string(dx) + ", " +
                  std::to_string(dy) + ")");
  }
  c.require(cycles == std::set<int>{1, 2, 3}, "expected 3 cycles");
}

// Regular wrapping against x(1) + ((x - x(1)) mod (n - j)) over integer times.
void wrap_oracle(Check& c) {
  for (int n = 4; n <= 40; ++n) {
    std::vector<double> ys(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ys[i] = std::sin(i);
    for (long start : {1L, 1900L}) {
      auto records = cf::testing::single_series(ys);
      for (auto& r : records) r.time += static_cast<double>(start - 1);
      for (int j = 1; j <= n - 3; ++j) {
        auto table = cf::ReactiveTable::ingest(records);
        cf::Interactor ia(table.coords());
        ia.wrap_x(j);
        const auto& s = table.coords();
        const long period = n - j;
        const long lower = static_cast<long>(*std::min_element(s.x0.begin(), s.x0.end()));
        for (int i = 0; i < n; ++i) {
          const long offset = static_cast<long>(s.x0[i]) - lower;
          const double want = static_cast<double>(lower + offset % period);
          const int cycle = static_cast<int>(offset / period) + 1;
          c.require(s.x[i] == want && s.groups.wrap[i] == cycle,
"start=" + std::to_string(start) + " n=" + std::to_string(n) + " j=" + std::to_string(j) +
                        " i=" + std::to_string(i));
        }
      }
    }
  }
}

void random_step(cf::Interactor& ia, std::mt19937_64& rng, bool rekeying = true) {
  std::uniform_int_distribution<int> kind(0, rekeying ? 11 : 9);
  std::uniform_int_distribution<int> small(1, 8);
  switch (kind(rng)) {
    case 0: ia.wrap_x(small(rng)); break;
    case 1: ia.unwrap_x(small(rng)); break;
    case 2: {
      const std::vector<int> u{small(rng), small(rng) - 1};
      ia.wrap_x_multiplicative(u);
      break;
    }
    case 3: ia.wrap_x_to_period(small(rng) + 3); break;
    case 4: ia.wrap_x_irregular(0.5 * small(rng), small(rng)); break;
    case 5: ia.facet_individual(small(rng), 0.1); break;
    case 6: ia.facet_variable(); break;
    case 7: ia.facet_period(); break;
    case 8: ia.mirror(static_cast<cf::Divider>(small(rng) % 4)); break;
    case 9: ia.shift_x(1.0, 1.0 + 0.25 * small(rng), small(rng) % 4 + 1); break;
    case 10: ia.wrap_y(0.2 + 0.1 * small(rng)); break;
    default: ia.standardize(); break;
  }
}

// recompute_baseline(stream) equals the incrementally maintained state.
void baseline_equivalence(Check& c) {
  std::mt19937_64 rng(20240611);
  std::size_t kinds_seen = 0;
  std::set<cf::InteractionKind> kinds;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<cf::TemporalRecord> records;
    switch (trial % 3) {
      case 0: records = cf::testing::single_series(cf::testing::random_values(rng, 30)); break;
      case 1: {
        std::vector<std::vector<double>> v;
        for (int k = 0; k < 2; ++k) v.push_back(cf::testing::random_values(rng, 15));
        records = cf::testing::grid_records({"a", "b"}, {""}, v);
        break;
      }
      default: {
        std::vector<std::vector<double>> v;
        for (int k = 0; k < 6; ++k) v.push_back(cf::testing::random_values(rng, 5));
        records = cf::testing::grid_records({"a", "b"}, {"p", "q", "r"}, v);
        break;
      }
    }
    auto table = cf::ReactiveTable::ingest(records);
    auto& s = table.coords();
    cf::Interactor ia(s);
    const int length = static_cast<int>(rng() % 10) + 1;
    for (int step = 0; step < length; ++step) {
      try {
        random_step(ia, rng);
      } catch (const cf::InteractionError&) {
        continue;
      }
      for (const auto& r : ia.stream().records()) kinds.insert(r.kind);
      const auto replay = cf::recompute_baseline(s, ia.stream());
      double worst = 0.0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        worst = std::max({worst, std::abs(replay.x[i] - s.x[i]), std::abs(replay.y[i] - s.y[i])});
      }
      c.require(worst <= 1e-9, "trial " + std::to_string(trial) + " step " +
                                   std::to_string(step) + ": diff " + std::to_string(worst));
      c.require(replay.groups.line == s.groups.line,
                "trial " + std::to_string(trial) + ": line groups differ");
    }
  }
  kinds_seen = kinds.size();
  // wrapY re-keys the baseline, so it never survives in a stream.
  c.require(kinds_seen == cf::kAllInteractionKinds.size() - 1,
            "only " + std::to_string(kinds_seen) + " kinds exercised");
}

// Two toggles restore y bit for bit; one toggle lifts every point to >= p.
void mirror_properties(Check& c) {
  std::mt19937_64 rng(5);
  const cf::Divider dividers[] = {cf::Divider::mean, cf::Divider::median, cf::Divider::midrange,
                                  cf::Divider::initialValue};
  for (int trial = 0; trial < 250; ++trial) {
    std::vector<std::vector<double>> v;
    for (int k = 0; k < 3; ++k) {
      v.push_back(cf::testing::random_values(rng, 5 + rng() % 40, -50.0, 50.0));
    }
    const auto records = cf::testing::grid_records({"a", "b", "c"}, {""}, v);
    for (cf::Divider d : dividers) {
      auto table = cf::ReactiveTable::ingest(records);
      auto& s = table.coords();
      cf::Interactor ia(s);
      if (trial % 2 == 1) ia.facet_variable();
      const auto before = s.y;
      ia.mirror(d);
      for (std::size_t series = 0; series < table.series_count(); ++series) {
        std::vector<double> ys;
        for (std::size_t row : table.series_rows(series)) ys.push_back(s.y0[row]);
        const double p = cf::divider_value(ys, d);
        for (std::size_t row : table.series_rows(series)) {
          const double reflected = s.y[row] - (before[row] - s.y0[row]);
          c.require(reflected >= p - 1e-12 * std::max(1.0, std::abs(p)),
                    std::string(cf::to_string(d)) + ": point below divider");
          c.require(std::abs(reflected - (std::abs(s.y0[row] - p) + p)) <= 1e-9,
                    std::string(cf::to_string(d)) + ": not a reflection");
        }
      }
      ia.mirror(d);
      c.require(s.y == before, std::string(cf::to_string(d)) + ": double toggle not exact");
    }
  }
}

cf::LinkSpec link(const char* source, const char* target, const char* variable) {
  cf::LinkSpec s;
  s.source = source;
  s.target = target;
  s.variable = variable;
  return s;
}

// Brushing (V1, t=2) in long reaches wide t=2 and stops there.
void linking_loop_cut(Check& c) {
  {
    auto long_table = cf::ReactiveTable::ingest(
        cf::testing::grid_records({"V1", "V2"}, {""}, {{1, 2, 3}, {4, 5, 6}}));
    auto wide = cf::WideTable::from_long(long_table);
    cf::LinkGraph graph;
    graph.add_table(long_table);
    graph.add_table(wide);
    graph.add_link(link("long", "wide", "time"));
    const std::vector<std::size_t> v1_t2{1};
    const auto firings = graph.brush("long", v1_t2);
    c.require(wide.brushed_rows() == std::vector<std::size_t>{1}, "wide t=2 not brushed");
    c.require(long_table.brushed_rows() == v1_t2, "long brushed " +
                                                    std::to_string(long_table.brushed_rows().size()) +
                                                    " rows");
    c.require(firings == 1, "firings " + std::to_string(firings));
    c.require(!graph.propagating(), "still propagating");
  }
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::vector<double>> v;
    for (int k = 0; k < 4; ++k) v.push_back(cf::testing::random_values(rng, 6));
    auto session = cf::Session::from_records(
        cf::testing::grid_records({"V1", "V2"}, {"a", "b"}, v));
    const auto names = session.view_names();
    const std::size_t links = session.links().link_count();
    for (int step = 0; step < 8; ++step) {
      const std::string& name = names[rng() % names.size()];
      const std::size_t rows = session.view(name).row_count();
      cf::cmd::Brush b;
      b.view = name;
      for (std::size_t r = 0; r < rows; ++r) {
        if (rng() % 4 == 0) b.ids.push_back(r);
      }
      std::size_t before = 0;
      for (std::size_t k = 0; k < links; ++k) before += session.links().stats(k).firings;
      session.apply(b);
      std::size_t after = 0;
      for (std::size_t k = 0; k < links; ++k) after += session.links().stats(k).firings;
      c.require(after - before <= links, "firings " + std::to_string(after - before) +
                                             " exceed " + std::to_string(links) + " links");

      std::map<std::string, std::vector<std::size_t>> settled;
      for (const auto& n : names) settled[n] = session.view(n).brushed_rows();
      b.ids = settled[name];
      session.apply(b);
      for (const auto& n : names) {
        c.require(session.view(n).brushed_rows() == settled[n], "re-brush changed view " + n);
      }
    }
  }
}

// Segments = n - #line groups (a singleton contributes none); one polygon each.
void layer_counts(Check& c) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::vector<double>> v;
    const std::size_t len = 4 + rng() % 30;
    for (int k = 0; k < 4; ++k) v.push_back(cf::testing::random_values(rng, len));
    auto table = cf::ReactiveTable::ingest(
        cf::testing::grid_records({"V1", "V2"}, {"a", "b"}, v));
    auto& s = table.coords();
    cf::Interactor ia(s);
    const int steps = static_cast<int>(rng() % 6);
    for (int k = 0; k < steps; ++k) {
      try {
        random_step(ia, rng, false);
      } catch (const cf::InteractionError&) {
      }
    }
    std::map<int, std::size_t> per_group;
    for (int l : s.groups.line) ++per_group[l];
    std::size_t expected = 0;
    for (const auto& [_, count] : per_group) expected += count - 1;
    const auto lines = cf::build_layers(s, table.attributes(), cf::RenderMode::line);
    const auto areas = cf::build_layers(s, table.attributes(), cf::RenderMode::area);
    c.require(lines.lines.size() == expected,
              "segments " + std::to_string(lines.lines.size()) + " != " +
                  std::to_string(expected));
    c.require(lines.lines.size() == s.size() - per_group.size(), "n - groups mismatch");
    c.require(areas.areas.size() == lines.lines.size(),
              "polygons " + std::to_string(areas.areas.size()));
  }
}

// Same script twice gives identical exports; wire replay reaches the same state.
void script_determinism(Check& c) {
  const std::string script =
      "wrapX 40\nfacetVar\nmirror median\nshiftX 2 3 9.5\nbrush wholeSeries 5\n"
      "facetPeriod\nswitch area\nwrapX 3\nunwrapX 2\nbrush view=wide sameTime 7";
  std::string first;
  for (int run = 0; run < 5; ++run) {
    auto s = cf::Session::from_records(cf::testing::lynx_records());
    const auto out = s.run_script(script);
    c.require(out.ok(), "script failed: " + out.error);
    const auto text = cf::export_coordinates(s);
    if (run == 0) first = text;
    c.require(text == first, "export differs on run " + std::to_string(run));
  }

  cf::SessionHost host(cf::Session::from_records(cf::testing::lynx_records()));
  std::vector<nlohmann::json> inbox;
  const auto id = host.connect(
      [&](const std::string& text) { inbox.push_back(nlohmann::json::parse(text)); });
  for (const auto& command : cf::parse_script(script)) {
    auto m = cf::command_to_json(command);
    m["type"] = std::holds_alternative<cf::cmd::Brush>(command) ? "brush" : "interact";
    host.submit(id, m.dump());
  }
  for (const auto& m : inbox) c.require(m["type"] == "layerDiff", "wire error: " + m.dump());
  std::string wire;
  cf::LayerSet wire_layers;
  host.inspect([&](const cf::Session* s) {
    wire = cf::export_coordinates(*s);
    wire_layers = s->layers();
  });
  auto direct = cf::Session::from_records(cf::testing::lynx_records());
  direct.run_script(script);
  c.require(wire == first, "wire export differs from script export");
  c.require(wire_layers == direct.layers(), "wire layers differ from script layers");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"composed-facet-table", 1.0, composed_facet},
      {"lynx-wrap75-facetvar", 1.0, lynx_composition},
      {"wrap-modular-oracle", 10.0, wrap_oracle},
      {"baseline-equals-incremental", 30.0, baseline_equivalence},
      {"mirror-involution-reflection", 5.0, mirror_properties},
      {"linking-loop-cut", 10.0, linking_loop_cut},
      {"layer-counts", 5.0, layer_counts},
      {"script-determinism-wire-replay", 10.0, script_determinism},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    check.require(seconds < criterion.budget_seconds, "over time budget");
    std::printf("%s %-32s %8.3fs (budget %gs)%s%s\n", check.ok ? "PASS" : "FAIL", criterion.name,
                seconds, criterion.budget_seconds, check.ok ? "" : "  ",
                check.detail.c_str());
    failures += check.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
