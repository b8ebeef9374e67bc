#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include "chronofold/session/host.hpp"

namespace chronofold::net {

inline constexpr const char* kPortEnv = "CHRONOFOLD_PORT";
inline constexpr std::uint16_t kDefaultPort = 8080;

/// Port from CHRONOFOLD_PORT, or kDefaultPort when unset or invalid.
std::uint16_t default_port();

struct ServerOptions {
  std::string address = "127.0.0.1";
  std::uint16_t port = kDefaultPort;  // 0 picks a free port
  std::filesystem::path assets;       // static UI bundle; empty serves a stub page
};

/// HTTP + WebSocket endpoint for a SessionHost. Plain GETs serve the static
/// asset bundle; an upgrade request on any path opens a protocol channel in
/// which each WebSocket message carries one JSON message.
class Server {
 public:
  Server(SessionHost& host, ServerOptions options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Bound port (useful when options.port was 0).
  std::uint16_t port() const;

  /// Serves on a background thread.
  void start();
  /// Serves on the calling thread until stop(), or until SIGINT/SIGTERM
  /// when `stop_on_signal` is set.
  void run(bool stop_on_signal = false);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace chronofold::net
