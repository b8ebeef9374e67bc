#include "chronofold/session/command.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chronofold/model/errors.hpp"

namespace chronofold {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

[[noreturn]] void fail(const std::string& message) { throw ParseError(message, 0); }

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t b = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > b) out.push_back(text.substr(b, i - b));
  }
  return out;
}

template <class T>
T number(std::string_view op, std::string_view token) {
  T v{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(std::string(op) + ": '" + std::string(token) + "' is not a valid number");
  }
  return v;
}

std::string shortest(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void arity(std::string_view op, const std::vector<std::string_view>& args, std::size_t lo,
           std::size_t hi) {
  if (args.size() < lo || args.size() > hi) {
    fail(std::string(op) + ": wrong number of arguments");
  }
}

bool is_op(std::string_view op, std::initializer_list<std::string_view> names) {
  for (auto n : names) {
    if (op == n) return true;
  }
  return false;
}

Divider divider_arg(std::string_view text) {
  auto d = parse_divider(text);
  if (!d) fail("mirror: unknown divider '" + std::string(text) + "'");
  return *d;
}

HighlightMode mode_arg(std::string_view text) {
  auto m = parse_highlight_mode(text);
  if (!m) fail("brush: unknown highlight mode '" + std::string(text) + "'");
  return *m;
}

RenderMode render_arg(std::string_view text) {
  if (text == "line") return RenderMode::line;
  if (text == "area") return RenderMode::area;
  fail("switch: expected 'line' or 'area', got '" + std::string(text) + "'");
}

}  // namespace

std::string_view command_name(const Command& command) {
  return std::visit(
      Overloaded{
          [](const cmd::WrapX&) { return "wrapX"; },
          [](const cmd::UnwrapX&) { return "unwrapX"; },
          [](const cmd::WrapXMult&) { return "wrapXMult"; },
          [](const cmd::WrapPeriod&) { return "wrapPeriod"; },
          [](const cmd::WrapIrregular&) { return "wrapIrregular"; },
          [](const cmd::WrapY&) { return "wrapY"; },
          [](const cmd::FacetIndividual&) { return "facetInd"; },
          [](const cmd::FacetVariable&) { return "facetVar"; },
          [](const cmd::FacetPeriod&) { return "facetPeriod"; },
          [](const cmd::Mirror&) { return "mirror"; },
          [](const cmd::ShiftX&) { return "shiftX"; },
          [](const cmd::Switch&) { return "switch"; },
          [](const cmd::Brush&) { return "brush"; },
          [](const cmd::Standardize&) { return "standardize"; },
      },
      command);
}

Command parse_command(std::string_view text) {
  auto tokens = tokenize(text);
  if (tokens.empty()) fail("empty command");
  const std::string_view op = tokens.front();
  const std::vector<std::string_view> args(tokens.begin() + 1, tokens.end());

  if (is_op(op, {"wrapX", "wrap"})) {
    arity(op, args, 0, 1);
    cmd::WrapX c;
    if (!args.empty()) c.steps = number<int>(op, args[0]);
    if (c.steps < 0) fail("wrapX: step count must be non-negative");
    return c;
  }
  if (is_op(op, {"unwrapX", "unwrap"})) {
    arity(op, args, 0, 1);
    cmd::UnwrapX c;
    if (!args.empty()) c.steps = number<int>(op, args[0]);
    if (c.steps < 0) fail("unwrapX: step count must be non-negative");
    return c;
  }
  if (op == "wrapXMult") {
    if (args.empty()) fail("wrapXMult: expected at least one step size");
    cmd::WrapXMult c;
    for (auto a : args) c.step_sizes.push_back(number<int>(op, a));
    return c;
  }
  if (op == "wrapPeriod") {
    arity(op, args, 1, 1);
    return cmd::WrapPeriod{number<int>(op, args[0])};
  }
  if (op == "wrapIrregular") {
    arity(op, args, 1, 2);
    cmd::WrapIrregular c{number<double>(op, args[0])};
    if (args.size() > 1) c.steps = number<int>(op, args[1]);
    return c;
  }
  if (op == "wrapY") {
    arity(op, args, 1, 1);
    return cmd::WrapY{number<double>(op, args[0])};
  }
  if (is_op(op, {"facetInd", "facetIndividual"})) {
    arity(op, args, 0, 2);
    cmd::FacetIndividual c;
    if (!args.empty()) c.steps = number<int>(op, args[0]);
    if (args.size() > 1) c.step = number<double>(op, args[1]);
    if (c.steps < 0) fail("facetInd: step count must be non-negative");
    return c;
  }
  if (is_op(op, {"facetVar", "facetVariable"})) {
    arity(op, args, 0, 0);
    return cmd::FacetVariable{};
  }
  if (op == "facetPeriod") {
    arity(op, args, 0, 0);
    return cmd::FacetPeriod{};
  }
  if (op == "mirror") {
    arity(op, args, 0, 1);
    cmd::Mirror c;
    if (!args.empty()) c.divider = divider_arg(args[0]);
    return c;
  }
  if (op == "shiftX") {
    arity(op, args, 3, 3);
    return cmd::ShiftX{number<int>(op, args[0]), number<double>(op, args[1]),
                       number<double>(op, args[2])};
  }
  if (op == "switch") {
    arity(op, args, 0, 1);
    cmd::Switch c;
    if (!args.empty()) c.mode = render_arg(args[0]);
    return c;
  }
  if (op == "brush") {
    cmd::Brush c;
    std::size_t k = 0;
    if (k < args.size() && args[k].starts_with("view=")) {
      c.view = std::string(args[k].substr(5));
      if (c.view.empty()) fail("brush: empty view name");
      ++k;
    }
    if (k >= args.size()) fail("brush: expected a highlight mode or 'clear'");
    if (args[k] == "clear") {
      if (k + 1 != args.size()) fail("brush: 'clear' takes no ids");
      return c;
    }
    c.mode = mode_arg(args[k++]);
    if (k >= args.size()) fail("brush: expected at least one id");
    for (; k < args.size(); ++k) c.ids.push_back(number<std::size_t>(op, args[k]));
    return c;
  }
  if (op == "standardize") {
    arity(op, args, 0, 0);
    return cmd::Standardize{};
  }
  fail("unknown command '" + std::string(op) + "'");
}

std::vector<Command> parse_script(std::string_view text) {
  std::vector<Command> out;
  std::size_t line = 1;
  std::size_t start = 0;
  bool comment = false;
  std::string current;
  const auto flush = [&] {
    if (tokenize(current).empty()) {
      current.clear();
      return;
    }
    try {
      out.push_back(parse_command(current));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line) + ": " + e.what(), line);
    }
    current.clear();
  };
  for (std::size_t i = start; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') {
      flush();
      comment = false;
      ++line;
    } else if (comment) {
      continue;
    } else if (c == '#') {
      comment = true;
    } else if (c == ';') {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  return out;
}

std::string format_command(const Command& command) {
  std::ostringstream out;
  out << command_name(command);
  std::visit(Overloaded{
                 [&](const cmd::WrapX& c) { out << ' ' << c.steps; },
                 [&](const cmd::UnwrapX& c) { out << ' ' << c.steps; },
                 [&](const cmd::WrapXMult& c) {
                   for (int u : c.step_sizes) out << ' ' << u;
                 },
                 [&](const cmd::WrapPeriod& c) { out << ' ' << c.period; },
                 [&](const cmd::WrapIrregular& c) {
                   out << ' ' << shortest(c.speed) << ' ' << c.steps;
                 },
                 [&](const cmd::WrapY& c) { out << ' ' << shortest(c.band); },
                 [&](const cmd::FacetIndividual& c) {
                   out << ' ' << c.steps << ' ' << shortest(c.step);
                 },
                 [&](const cmd::FacetVariable&) {},
                 [&](const cmd::FacetPeriod&) {},
                 [&](const cmd::Mirror& c) { out << ' ' << to_string(c.divider); },
                 [&](const cmd::ShiftX& c) {
                   out << ' ' << c.group << ' ' << shortest(c.from) << ' ' << shortest(c.to);
                 },
                 [&](const cmd::Switch& c) {
                   if (c.mode) out << ' ' << to_string(*c.mode);
                 },
                 [&](const cmd::Brush& c) {
                   if (c.view != "long") out << " view=" << c.view;
                   if (c.ids.empty()) {
                     out << " clear";
                     return;
                   }
                   out << ' ' << to_string(c.mode);
                   for (auto id : c.ids) out << ' ' << id;
                 },
                 [&](const cmd::Standardize&) {},
             },
             command);
  return out.str();
}

nlohmann::json command_to_json(const Command& command) {
  nlohmann::json j;
  j["op"] = std::string(command_name(command));
  std::visit(Overloaded{
                 [&](const cmd::WrapX& c) { j["steps"] = c.steps; },
                 [&](const cmd::UnwrapX& c) { j["steps"] = c.steps; },
                 [&](const cmd::WrapXMult& c) { j["stepSizes"] = c.step_sizes; },
                 [&](const cmd::WrapPeriod& c) { j["period"] = c.period; },
                 [&](const cmd::WrapIrregular& c) {
                   j["speed"] = c.speed;
                   j["steps"] = c.steps;
                 },
                 [&](const cmd::WrapY& c) { j["band"] = c.band; },
                 [&](const cmd::FacetIndividual& c) {
                   j["steps"] = c.steps;
                   j["step"] = c.step;
                 },
                 [&](const cmd::FacetVariable&) {},
                 [&](const cmd::FacetPeriod&) {},
                 [&](const cmd::Mirror& c) { j["divider"] = std::string(to_string(c.divider)); },
                 [&](const cmd::ShiftX& c) {
                   j["group"] = c.group;
                   j["from"] = c.from;
                   j["to"] = c.to;
                 },
                 [&](const cmd::Switch& c) {
                   if (c.mode) j["mode"] = std::string(to_string(*c.mode));
                 },
                 [&](const cmd::Brush& c) {
                   j["view"] = c.view;
                   j["mode"] = std::string(to_string(c.mode));
                   j["ids"] = c.ids;
                 },
                 [&](const cmd::Standardize&) {},
             },
             command);
  return j;
}

namespace {

template <class T>
T field(const nlohmann::json& m, const char* key, T fallback) {
  if (!m.contains(key)) return fallback;
  try {
    return m.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(std::string("field '") + key + "' has the wrong type");
  }
}

template <class T>
T required(const nlohmann::json& m, const char* key) {
  if (!m.contains(key)) fail(std::string("missing field '") + key + "'");
  return field<T>(m, key, T{});
}

}  // namespace

Command command_from_json(const nlohmann::json& m) {
  if (!m.is_object()) fail("message must be a JSON object");
  const auto op = required<std::string>(m, "op");
  if (op == "wrapX" || op == "wrap") {
    const int steps = field<int>(m, "steps", 1);
    if (steps < 0) fail("wrapX: step count must be non-negative");
    return cmd::WrapX{steps};
  }
  if (op == "unwrapX" || op == "unwrap") {
    const int steps = field<int>(m, "steps", 1);
    if (steps < 0) fail("unwrapX: step count must be non-negative");
    return cmd::UnwrapX{steps};
  }
  if (op == "wrapXMult") {
    auto sizes = required<std::vector<int>>(m, "stepSizes");
    if (sizes.empty()) fail("wrapXMult: expected at least one step size");
    return cmd::WrapXMult{std::move(sizes)};
  }
  if (op == "wrapPeriod") return cmd::WrapPeriod{required<int>(m, "period")};
  if (op == "wrapIrregular") {
    return cmd::WrapIrregular{required<double>(m, "speed"), field<int>(m, "steps", 1)};
  }
  if (op == "wrapY") return cmd::WrapY{required<double>(m, "band")};
  if (op == "facetInd" || op == "facetIndividual") {
    const int steps = field<int>(m, "steps", 1);
    if (steps < 0) fail("facetInd: step count must be non-negative");
    return cmd::FacetIndividual{steps, field<double>(m, "step", kDefaultFacetStep)};
  }
  if (op == "facetVar" || op == "facetVariable") return cmd::FacetVariable{};
  if (op == "facetPeriod") return cmd::FacetPeriod{};
  if (op == "mirror") {
    return cmd::Mirror{divider_arg(field<std::string>(m, "divider", "mean"))};
  }
  if (op == "shiftX") {
    return cmd::ShiftX{required<int>(m, "group"), required<double>(m, "from"),
                       required<double>(m, "to")};
  }
  if (op == "switch") {
    cmd::Switch c;
    if (m.contains("mode")) c.mode = render_arg(required<std::string>(m, "mode"));
    return c;
  }
  if (op == "brush") {
    cmd::Brush c;
    c.view = field<std::string>(m, "view", "long");
    c.mode = mode_arg(field<std::string>(m, "mode", "singlePoint"));
    c.ids = field<std::vector<std::size_t>>(m, "ids", {});
    return c;
  }
  if (op == "standardize") return cmd::Standardize{};
  fail("unknown op '" + op + "'");
}

}  // namespace chronofold
