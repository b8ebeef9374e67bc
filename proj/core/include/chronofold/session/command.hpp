#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chronofold/algebra/facet.hpp"
#include "chronofold/algebra/mirror.hpp"
#include "chronofold/algebra/wrap.hpp"
#include "chronofold/layers/layers.hpp"
#include "chronofold/linking/self_link.hpp"

namespace chronofold {

namespace cmd {

struct WrapX {
  int steps = 1;
  int stop = kDefaultWrapStop;
  friend bool operator==(const WrapX&, const WrapX&) = default;
};
struct UnwrapX {
  int steps = 1;
  friend bool operator==(const UnwrapX&, const UnwrapX&) = default;
};
struct WrapXMult {
  std::vector<int> step_sizes;
  friend bool operator==(const WrapXMult&, const WrapXMult&) = default;
};
struct WrapPeriod {
  int period = 0;
  friend bool operator==(const WrapPeriod&, const WrapPeriod&) = default;
};
struct WrapIrregular {
  double speed = 0.0;
  int steps = 1;
  friend bool operator==(const WrapIrregular&, const WrapIrregular&) = default;
};
struct WrapY {
  double band = 0.0;
  friend bool operator==(const WrapY&, const WrapY&) = default;
};
struct FacetIndividual {
  int steps = 1;
  double step = kDefaultFacetStep;
  friend bool operator==(const FacetIndividual&, const FacetIndividual&) = default;
};
struct FacetVariable {
  friend bool operator==(const FacetVariable&, const FacetVariable&) = default;
};
struct FacetPeriod {
  friend bool operator==(const FacetPeriod&, const FacetPeriod&) = default;
};
struct Mirror {
  Divider divider = Divider::mean;
  friend bool operator==(const Mirror&, const Mirror&) = default;
};
struct ShiftX {
  int group = 1;
  double from = 0.0;
  double to = 0.0;
  friend bool operator==(const ShiftX&, const ShiftX&) = default;
};
/// Toggles line/area, or sets the given mode.
struct Switch {
  std::optional<RenderMode> mode;
  friend bool operator==(const Switch&, const Switch&) = default;
};
/// Replaces the selection of `view`; empty ids clear it.
struct Brush {
  std::string view = "long";
  HighlightMode mode = HighlightMode::singlePoint;
  std::vector<std::size_t> ids;
  friend bool operator==(const Brush&, const Brush&) = default;
};
struct Standardize {
  friend bool operator==(const Standardize&, const Standardize&) = default;
};

}  // namespace cmd

using Command = std::variant<cmd::WrapX, cmd::UnwrapX, cmd::WrapXMult, cmd::WrapPeriod,
                             cmd::WrapIrregular, cmd::WrapY, cmd::FacetIndividual,
                             cmd::FacetVariable, cmd::FacetPeriod, cmd::Mirror, cmd::ShiftX,
                             cmd::Switch, cmd::Brush, cmd::Standardize>;

/// Name used in scripts and as the wire "op".
std::string_view command_name(const Command& command);

/// Parses one script statement such as "wrapX 75" or "brush wholeSeries 7".
/// Throws ParseError (line 0) on unknown ops or bad arguments.
Command parse_command(std::string_view text);

/// Statements are separated by newlines or ';'; '#' starts a comment.
/// ParseError::line() is the 1-based source line of the failing statement.
std::vector<Command> parse_script(std::string_view text);

/// Script text that parses back to `command`.
std::string format_command(const Command& command);

/// Wire form: {"op": name, ...arguments}.
nlohmann::json command_to_json(const Command& command);
/// Throws ParseError (line 0) on a malformed message.
Command command_from_json(const nlohmann::json& message);

}  // namespace chronofold
