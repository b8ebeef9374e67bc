#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "chronofold/session/session.hpp"

namespace chronofold {

/// Serves one session to any number of clients.
///
/// Messages from all clients are queued FIFO and handled one at a time by
/// whichever caller finds the queue idle. Mutations are broadcast to every
/// connected client as identical layerDiff messages in handling order;
/// replies to hello and queryAt, and error frames, go to the sender only.
/// A failing message leaves the session unchanged.
class SessionHost {
 public:
  using ClientId = std::uint64_t;
  using Sink = std::function<void(const std::string&)>;

  explicit SessionHost(std::optional<Session> session = std::nullopt,
                       SessionOptions options = {});

  ClientId connect(Sink sink);
  void disconnect(ClientId client);

  /// Queues a raw message from `client` and drains the queue if idle.
  void submit(ClientId client, std::string text);

  /// Runs `fn` on the session under the host's lock (nullptr if unloaded).
  void inspect(const std::function<void(const Session*)>& fn) const;

 private:
  struct Pending {
    ClientId client;
    std::string text;
  };

  void handle(const Pending& pending);
  nlohmann::json mutate(const nlohmann::json& message, const Command& command);
  void send(ClientId client, const nlohmann::json& message);
  void broadcast(const nlohmann::json& message);

  mutable std::mutex state_mutex_;
  std::mutex queue_mutex_;
  std::deque<Pending> queue_;
  bool draining_ = false;
  std::optional<Session> session_;
  SessionOptions options_;
  std::map<ClientId, Sink> clients_;
  ClientId next_client_ = 1;
};

}  // namespace chronofold
