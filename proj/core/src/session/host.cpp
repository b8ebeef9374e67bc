#include "chronofold/session/host.hpp"

#include <sstream>

#include "chronofold/model/errors.hpp"
#include "chronofold/session/protocol.hpp"

namespace chronofold {

namespace {

CsvLayout layout_arg(const nlohmann::json& message) {
  const auto text = message.value("layout", std::string("auto"));
  if (text == "auto") return CsvLayout::automatic;
  if (text == "wide") return CsvLayout::wide;
  if (text == "long") return CsvLayout::longFormat;
  throw ParseError("layout must be 'auto', 'wide' or 'long'", 0);
}

nlohmann::json error_frame(const std::string& message, const nlohmann::json& request) {
  nlohmann::json j = {{"type", msg::error}, {"message", message}};
  if (request.is_object() && request.contains("id")) j["id"] = request["id"];
  return j;
}

}  // namespace

SessionHost::SessionHost(std::optional<Session> session, SessionOptions options)
    : session_(std::move(session)), options_(options) {}

SessionHost::ClientId SessionHost::connect(Sink sink) {
  std::lock_guard lock(state_mutex_);
  const ClientId id = next_client_++;
  clients_.emplace(id, std::move(sink));
  return id;
}

void SessionHost::disconnect(ClientId client) {
  std::lock_guard lock(state_mutex_);
  clients_.erase(client);
}

void SessionHost::submit(ClientId client, std::string text) {
  {
    std::lock_guard lock(queue_mutex_);
    queue_.push_back({client, std::move(text)});
    if (draining_) return;
    draining_ = true;
  }
  for (;;) {
    Pending next;
    {
      std::lock_guard lock(queue_mutex_);
      if (queue_.empty()) {
        draining_ = false;
        return;
      }
      next = std::move(queue_.front());
      queue_.pop_front();
    }
    std::lock_guard lock(state_mutex_);
    handle(next);
  }
}

void SessionHost::inspect(const std::function<void(const Session*)>& fn) const {
  std::lock_guard lock(state_mutex_);
  fn(session_ ? &*session_ : nullptr);
}

void SessionHost::send(ClientId client, const nlohmann::json& message) {
  const auto it = clients_.find(client);
  if (it != clients_.end()) it->second(message.dump());
}

void SessionHost::broadcast(const nlohmann::json& message) {
  const std::string text = message.dump();
  for (const auto& [_, sink] : clients_) sink(text);
}

void SessionHost::handle(const Pending& pending) {
  nlohmann::json message;
  try {
    message = nlohmann::json::parse(pending.text);
  } catch (const nlohmann::json::parse_error& e) {
    send(pending.client, error_frame(std::string("malformed JSON: ") + e.what(), {}));
    return;
  }
  try {
    const std::string type = message_type(message);
    if (type == msg::hello) {
      nlohmann::json reply = {{"type", msg::hello},
                              {"protocol", kProtocolVersion},
                              {"loaded", session_.has_value()}};
      if (session_) reply["state"] = full_state(*session_);
      send(pending.client, reply);
      return;
    }
    if (type == msg::load_data) {
      if (!message.contains("csv") || !message["csv"].is_string()) {
        throw ParseError("loadData needs a 'csv' string", 0);
      }
      std::istringstream in(message["csv"].get<std::string>());
      session_.emplace(
          Session::from_records(records_from_csv(read_csv(in), layout_arg(message)), options_));
      broadcast(full_state(*session_));
      return;
    }
    if (!session_) throw Error("no data loaded");
    if (type == msg::query_at) {
      const double x = message.at("x").get<double>();
      const double y = message.at("y").get<double>();
      const double radius = message.value("radius", 0.5);
      nlohmann::json reply = {{"type", msg::query_at}};
      if (message.contains("id")) reply["id"] = message["id"];
      if (auto hit = session_->query_at(x, y, radius)) {
        reply["hit"] = true;
        reply["result"] = to_json(*hit);
      } else {
        reply["hit"] = false;
      }
      send(pending.client, reply);
      return;
    }
    if (type == msg::interact || type == msg::brush) {
      nlohmann::json body = message;
      if (type == msg::brush) body["op"] = "brush";
      const Command command = command_from_json(body);
      broadcast(mutate(message, command));
      return;
    }
    throw ParseError("unknown message type '" + type + "'", 0);
  } catch (const nlohmann::json::exception& e) {
    send(pending.client, error_frame(std::string("bad message: ") + e.what(), message));
  } catch (const Error& e) {
    send(pending.client, error_frame(e.what(), message));
  }
}

nlohmann::json SessionHost::mutate(const nlohmann::json& message, const Command& command) {
  const BrushSnapshot before = brush_snapshot(*session_);
  const ScriptOutcome outcome = session_->run({command});
  if (!outcome.ok()) throw InteractionError(outcome.error);

  nlohmann::json diff = {{"type", msg::layer_diff},
                         {"version", session_->version()},
                         {"op", std::string(command_name(command))},
                         {"warnings", outcome.warnings}};
  if (message.contains("id")) diff["id"] = message["id"];
  const bool redraw = !std::holds_alternative<cmd::Brush>(command);
  if (redraw) {
    const auto& c = session_->coords();
    diff["coords"] = {{"x", c.x}, {"y", c.y}, {"line", c.groups.line}};
  }
  const LayerSet layers = session_->layers();
  if (redraw) {
    diff["layers"] = to_json(layers);
  } else {
    diff["brushLayer"] = to_json(layers)["brush"];
  }
  diff["brushed"] = brush_diff(before, brush_snapshot(*session_));
  return diff;
}

}  // namespace chronofold
