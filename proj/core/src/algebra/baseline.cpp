#include "chronofold/algebra/baseline.hpp"

#include <algorithm>
#include <string>

#include "chronofold/algebra/facet.hpp"
#include "chronofold/algebra/mirror.hpp"
#include "chronofold/algebra/wrap.hpp"
#include "chronofold/model/errors.hpp"

namespace chronofold {

namespace {

const std::vector<int>& require_snapshot(const InteractionStream& stream,
                                         const InteractionRecord& record, std::size_t n) {
  if (!record.snapshot) {
    throw UnrecoverableState(std::string(to_string(record.kind)) + " record #" +
                             std::to_string(record.j) + " carries no group snapshot");
  }
  const std::vector<int>* groups = stream.snapshot(*record.snapshot);
  if (groups == nullptr) {
    throw UnrecoverableState(std::string(to_string(record.kind)) + " record #" +
                             std::to_string(record.j) + " references snapshot " +
                             std::to_string(*record.snapshot) + ", which was never stored");
  }
  if (groups->size() != n) {
    throw UnrecoverableState("group snapshot " + std::to_string(*record.snapshot) +
                             " has the wrong length");
  }
  return *groups;
}

void require_arity(const InteractionRecord& record, std::size_t params, std::size_t inputs) {
  if (record.params.size() < params || record.inputs.size() < inputs) {
    throw InteractionError(std::string("malformed ") + std::string(to_string(record.kind)) +
                           " record #" + std::to_string(record.j));
  }
}

struct FacetLevel {
  InteractionKind kind;
  const std::vector<int>* groups = nullptr;
  int presses = 0;
  double step = 1.0;
};

}  // namespace

CoordinateState recompute_baseline(const CoordinateState& state, const InteractionStream& stream) {
  const std::size_t n = state.size();
  CoordinateState out = state;
  out.x = out.x0;
  out.y = out.y0;
  out.groups.wrap.assign(n, 1);
  out.wrap_limits.reset();
  out.facet_offset.assign(n, 0.0);

  bool any_wrap = false;
  long depth = 0;
  long irregular_steps = 0;
  double speed = 0.0;
  int stop = kDefaultWrapStop;
  std::vector<FacetLevel> facets;
  int toggles = 0;
  Divider divider = Divider::mean;
  std::vector<double> shift_dx(n, 0.0);

  for (const InteractionRecord& record : stream.records()) {
    switch (record.kind) {
      case InteractionKind::wrapX: {
        require_arity(record, 3, 1);
        any_wrap = true;
        stop = static_cast<int>(record.params[wrap_param::stop]);
        const long u = static_cast<long>(record.inputs[wrap_input::points]);
        if (record.params[wrap_param::speed] > 0.0) {
          speed = record.params[wrap_param::speed];
          irregular_steps += u;
        } else {
          depth += u;
        }
        break;
      }
      case InteractionKind::facetIndividual:
      case InteractionKind::facetVariable:
      case InteractionKind::facetPeriod: {
        const std::vector<int>& groups = require_snapshot(stream, record, n);
        auto it = std::find_if(facets.begin(), facets.end(),
                               [&](const FacetLevel& f) { return f.kind == record.kind; });
        if (it == facets.end()) {
          facets.push_back(FacetLevel{record.kind});
          it = std::prev(facets.end());
        }
        it->groups = &groups;
        ++it->presses;
        if (record.kind == InteractionKind::facetIndividual) {
          require_arity(record, 1, 0);
          it->step = record.params[facet_param::step];
        }
        break;
      }
      case InteractionKind::mirror:
        require_arity(record, 1, 0);
        ++toggles;
        divider = static_cast<Divider>(static_cast<int>(record.params[mirror_param::divider]));
        break;
      case InteractionKind::shiftX: {
        require_arity(record, 0, 3);
        const std::vector<int>& groups = require_snapshot(stream, record, n);
        const double d = record.inputs[shift_input::drag_end] - record.inputs[shift_input::drag_start];
        const int target = static_cast<int>(record.inputs[shift_input::group]);
        for (std::size_t i = 0; i < n; ++i) {
          if (groups[i] == target) shift_dx[i] += d;
        }
        break;
      }
      case InteractionKind::wrapY:
        throw InteractionError("y-wrapping resets the baseline and cannot appear in a stream");
    }
  }

  if (any_wrap) {
    if (depth > 0 && irregular_steps > 0) {
      throw InteractionError("stream mixes regular and irregular wrapping");
    }
    const WrapAxis axis(out.x0);
    const double span = irregular_steps > 0
                            ? axis.upper() - speed * static_cast<double>(irregular_steps) -
                                  axis.lower() + 1.0
                            : axis.span(depth, stop);
    WrapLayout layout = wrap_layout(out.x0, axis.lower(), span);
    for (std::size_t i = 0; i < n; ++i) out.x[i] += layout.dx[i];
    out.groups.wrap = std::move(layout.groups);
    if (depth > 0 || irregular_steps > 0) out.wrap_limits = layout.limits;
  }
  refresh_line_groups(out.groups);

  if (!facets.empty()) {
    std::vector<FacetDimension> dims;
    for (const FacetLevel& f : facets) {
      FacetDimension d;
      d.groups = *f.groups;
      d.count = *std::max_element(d.groups.begin(), d.groups.end());
      d.fraction =
          f.kind == InteractionKind::facetIndividual ? facet_fraction(f.presses, f.step) : 1.0;
      dims.push_back(std::move(d));
    }
    out.facet_offset = facet_offsets(dims);
    for (std::size_t i = 0; i < n; ++i) out.y[i] += out.facet_offset[i];
  }

  if (toggles % 2 == 1) {
    const std::vector<double> p = series_dividers(out, divider);
    for (std::size_t i = 0; i < n; ++i) out.y[i] += std::max(2.0 * p[i] - 2.0 * out.y0[i], 0.0);
  }
  for (std::size_t i = 0; i < n; ++i) out.x[i] += shift_dx[i];
  return out;
}

}  // namespace chronofold
