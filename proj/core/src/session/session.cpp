#include "chronofold/session/session.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "chronofold/layers/aspect.hpp"
#include "chronofold/model/errors.hpp"

namespace chronofold {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void append(std::vector<std::string>& to, const std::vector<std::string>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

}  // namespace

Session::Session(Session&&) noexcept = default;
Session& Session::operator=(Session&&) noexcept = default;
Session::~Session() = default;

Session Session::from_records(std::vector<TemporalRecord> records, SessionOptions options) {
  Session s;
  s.options_ = options;
  s.long_ = std::make_unique<ReactiveTable>(ReactiveTable::ingest(std::move(records)));
  s.build_views();
  s.interactor_ = std::make_unique<Interactor>(s.long_->coords());
  s.aspect_ = initial_aspect(s.long_->coords());
  return s;
}

Session Session::from_csv(const std::filesystem::path& path, CsvLayout layout,
                          SessionOptions options) {
  return from_records(load_records(path, layout), options);
}

void Session::build_views() {
  std::vector<double> values;
  values.reserve(long_->size());
  for (const auto& r : long_->records()) values.push_back(r.value);
  auto binning = histogram_bins(values, options_.histogram_bins);
  long_->add_key_column("bin", binning.labels);

  wide_ = std::make_unique<WideTable>(WideTable::from_long(*long_, std::string(view::wide)));
  histogram_ = std::make_unique<CategoryTable>(CategoryTable::from_column(
      *long_, "bin", std::string(view::histogram), std::move(binning.bins)));
  categories_ = std::make_unique<CategoryTable>(
      CategoryTable::from_column(*long_, "variable", std::string(view::categories)));

  links_ = std::make_unique<LinkGraph>();
  links_->add_table(*long_);
  links_->add_table(*wide_);
  links_->add_table(*histogram_);
  links_->add_table(*categories_);
  const auto link = [&](std::string_view target, std::string variable) {
    LinkSpec spec;
    spec.source = std::string(view::time_plot);
    spec.target = std::string(target);
    spec.variable = std::move(variable);
    links_->add_link(std::move(spec));
  };
  link(view::wide, "time");
  link(view::histogram, "bin");
  link(view::categories, "variable");
}

std::vector<std::string> Session::view_names() const {
  return {std::string(view::time_plot), std::string(view::wide), std::string(view::histogram),
          std::string(view::categories)};
}

CommandOutcome Session::apply(const Command& command) {
  CommandOutcome out;
  Interactor& ia = *interactor_;
  const auto moved = [&](const auto& result) {
    append(out.warnings, result.warnings);
    out.coordinates_changed = true;
  };
  std::visit(Overloaded{
                 [&](const cmd::WrapX& c) { moved(ia.wrap_x(c.steps, c.stop)); },
                 [&](const cmd::UnwrapX& c) { moved(ia.unwrap_x(c.steps)); },
                 [&](const cmd::WrapXMult& c) { moved(ia.wrap_x_multiplicative(c.step_sizes)); },
                 [&](const cmd::WrapPeriod& c) { moved(ia.wrap_x_to_period(c.period)); },
                 [&](const cmd::WrapIrregular& c) {
                   moved(ia.wrap_x_irregular(c.speed, c.steps));
                 },
                 [&](const cmd::WrapY& c) { moved(ia.wrap_y(c.band)); },
                 [&](const cmd::FacetIndividual& c) {
                   moved(ia.facet_individual(c.steps, c.step));
                 },
                 [&](const cmd::FacetVariable&) { moved(ia.facet_variable()); },
                 [&](const cmd::FacetPeriod&) { moved(ia.facet_period()); },
                 [&](const cmd::Mirror& c) { moved(ia.mirror(c.divider)); },
                 [&](const cmd::ShiftX& c) { moved(ia.shift_x(c.from, c.to, c.group)); },
                 [&](const cmd::Switch& c) {
                   const RenderMode next =
                       c.mode ? *c.mode
                              : (mode_ == RenderMode::line ? RenderMode::area : RenderMode::line);
                   out.mode_changed = next != mode_;
                   mode_ = next;
                 },
                 [&](const cmd::Brush& c) {
                   links_->brush(c.view, c.ids, c.mode);
                   out.brush_changed = true;
                 },
                 [&](const cmd::Standardize&) { moved(ia.standardize()); },
             },
             command);
  if (out.coordinates_changed || out.mode_changed || out.brush_changed) ++version_;
  return out;
}

ScriptOutcome Session::run(const std::vector<Command>& commands) {
  ScriptOutcome out;
  for (std::size_t k = 0; k < commands.size(); ++k) {
    const CoordinateState saved_coords = long_->coords();
    const Interactor saved_interactor = *interactor_;
    try {
      append(out.warnings, apply(commands[k]).warnings);
      ++out.applied;
    } catch (const Error& e) {
      long_->coords() = saved_coords;
      *interactor_ = saved_interactor;
      out.failed_index = k;
      out.error = e.what();
      break;
    }
  }
  return out;
}

ScriptOutcome Session::run_script(std::string_view text) {
  std::vector<Command> commands;
  try {
    commands = parse_script(text);
  } catch (const ParseError& e) {
    ScriptOutcome out;
    out.failed_index = e.line() == 0 ? 0 : e.line() - 1;
    out.error = e.what();
    return out;
  }
  return run(commands);
}

std::optional<QueryResult> Session::query_at(double x, double y, double radius) const {
  const auto& c = long_->coords();
  std::optional<std::size_t> best;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!long_->attributes(i).visible) continue;
    const double d = std::hypot(c.x[i] - x, c.y[i] - y);
    if (d <= radius && d < best_d) {
      best = i;
      best_d = d;
    }
  }
  if (!best) return std::nullopt;
  const auto& r = long_->record(*best);
  return QueryResult{*best, r.time_label, r.variable, r.individual, r.value, c.x[*best],
                     c.y[*best]};
}

LayerSet Session::layers() const {
  LayerOptions options;
  options.stats = options_.stats;
  return build_layers(long_->coords(), long_->attributes(), mode_, options);
}

void Session::reload_baseline(const std::vector<double>& x, const std::vector<double>& y,
                              const std::vector<int>& lines, const std::vector<bool>& brushed,
                              const std::vector<std::string>& colors) {
  const std::size_t n = long_->size();
  if (x.size() != n || y.size() != n || lines.size() != n || brushed.size() != n ||
      colors.size() != n) {
    throw IngestError("reloaded coordinates have " + std::to_string(x.size()) +
                      " rows, session has " + std::to_string(n));
  }
  interactor_->reload_baseline(x, y, lines);
  std::map<std::string, std::vector<std::size_t>> by_color;
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < n; ++i) {
    if (long_->attributes(i).color != colors[i]) by_color[colors[i]].push_back(i);
    if (brushed[i]) selected.push_back(i);
  }
  for (const auto& [color, rows] : by_color) {
    AttributePatch patch;
    patch.color = color;
    long_->set_attributes(rows, patch);
  }
  links_->brush(view::time_plot, selected);
  ++version_;
}

}  // namespace chronofold
