#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "chronofold/algebra/facet.hpp"
#include "chronofold/algebra/mirror.hpp"
#include "chronofold/algebra/movement.hpp"
#include "chronofold/algebra/wrap.hpp"
#include "chronofold/algebra/ywrap.hpp"
#include "chronofold/model/coordinate_state.hpp"
#include "chronofold/model/interaction.hpp"

namespace chronofold {

enum class ResetKind { wrapY, standardize, reload };

/// Marker left when the current coordinates become the new baseline.
struct BaselineReset {
  ResetKind kind;
  std::size_t stream_length;  // records discarded by the reset
};

/// Incremental interaction engine.
///
/// Each call computes the new per-kind displacement from the baseline, adds
/// the difference to the current coordinates in place and appends one
/// InteractionRecord per keystroke. The stream it builds is what
/// recompute_baseline() replays.
class Interactor {
 public:
  /// `state` must outlive the interactor.
  explicit Interactor(CoordinateState& state);

  StepResult wrap_x(int steps = 1, int stop = kDefaultWrapStop);
  StepResult unwrap_x(int steps = 1);
  StepResult wrap_x_multiplicative(std::span<const int> step_sizes);
  StepResult wrap_x_to_period(int period_length);
  StepResult wrap_x_irregular(double speed, int steps = 1);
  YWrapResult wrap_y(double band);

  StepResult facet_individual(int steps = 1, double step = kDefaultFacetStep);
  StepResult facet_variable();
  StepResult facet_period();

  StepResult mirror(Divider divider = Divider::mean);
  StepResult shift_x(double drag_start, double drag_end, int group);

  /// Per-line min-max rescale of y; re-keys the baseline.
  StepResult standardize();
  /// Makes (x, y) the new baseline. Non-empty `lines` replaces the drawable
  /// line ids carried into the new baseline.
  void reload_baseline(std::vector<double> x, std::vector<double> y, std::vector<int> lines = {});

  const InteractionStream& stream() const { return stream_; }
  const std::vector<BaselineReset>& resets() const { return resets_; }
  const CoordinateState& state() const { return *state_; }

  long wrap_depth() const { return wrap_.depth; }
  long irregular_steps() const { return wrap_.irregular_steps; }
  int mirror_toggles() const { return mirror_.toggles; }

 private:
  struct WrapTrack {
    long depth = 0;
    long irregular_steps = 0;
    double speed = 0.0;
    int stop = kDefaultWrapStop;
    std::vector<double> total;
  };
  struct FacetEntry {
    InteractionKind kind;
    std::vector<int> groups;
    int count = 1;
    int presses = 0;
    double step = 1.0;
    SnapshotId snapshot = 0;
  };
  struct FacetTrack {
    std::vector<FacetEntry> stack;
    std::vector<double> total;
  };
  struct MirrorTrack {
    int toggles = 0;
    std::vector<double> total;
  };

  std::size_t size() const { return state_->size(); }
  void reset_tracks();
  void rekey(ResetKind kind, std::vector<double> new_y);

  // Moves x to the layout for the given regular depth or irregular step count.
  Movement apply_wrap(const InteractionRecord& record, std::vector<std::string>& warnings);
  Movement apply_facet(InteractionKind kind, std::vector<int> groups, double step,
                       std::vector<std::string>& warnings);
  // Replaces one kind's total displacement and rebuilds x and y from the
  // baseline in the order recompute_baseline() uses.
  Movement delta(std::vector<double>& total, const std::vector<double>& next, bool along_x);
  void recompose();
  void warn_if_not_standardized(std::vector<std::string>& warnings) const;

  CoordinateState* state_;
  InteractionStream stream_;
  std::vector<BaselineReset> resets_;
  WrapTrack wrap_;
  FacetTrack facet_;
  MirrorTrack mirror_;
  std::vector<double> shift_total_;
  std::vector<int> last_shift_snapshot_groups_;
  SnapshotId last_shift_snapshot_ = 0;
};

}  // namespace chronofold
