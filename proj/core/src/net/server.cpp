#include "chronofold/net/server.hpp"

#include <charconv>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>
#include <thread>

#include <boost/asio.hpp>
#include <boost/beast.hpp>

namespace chronofold::net {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

std::uint16_t default_port() {
  const char* env = std::getenv(kPortEnv);
  if (env == nullptr) return kDefaultPort;
  const std::string_view text(env);
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0 || value > 65535) {
    return kDefaultPort;
  }
  return static_cast<std::uint16_t>(value);
}

namespace {

constexpr const char* kStubPage =
    "<!doctype html><title>chronofold</title>"
    "<p>chronofold session server. Connect a WebSocket to this address and send "
    "{\"type\":\"hello\"}.</p>";

std::string mime_type(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".html") return "text/html";
  if (ext == ".js") return "application/javascript";
  if (ext == ".css") return "text/css";
  if (ext == ".json") return "application/json";
  if (ext == ".svg") return "image/svg+xml";
  if (ext == ".png") return "image/png";
  return "application/octet-stream";
}

class WsSession : public std::enable_shared_from_this<WsSession> {
 public:
  WsSession(tcp::socket socket, SessionHost& host) : ws_(std::move(socket)), host_(host) {}

  void start(http::request<http::string_body> request) {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept(request, [self = shared_from_this()](beast::error_code ec) {
      if (ec) return;
      std::weak_ptr<WsSession> weak = self;
      auto executor = self->ws_.get_executor();
      self->client_ = self->host_.connect([weak, executor](const std::string& text) {
        asio::post(executor, [weak, text] {
          if (auto s = weak.lock()) s->send(text);
        });
      });
      self->connected_ = true;
      self->read();
    });
  }

 private:
  void read() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) {
        self->close();
        return;
      }
      std::string text = beast::buffers_to_string(self->buffer_.data());
      self->buffer_.consume(self->buffer_.size());
      self->host_.submit(self->client_, std::move(text));
      self->read();
    });
  }

  void send(const std::string& text) {
    outbox_.push_back(text);
    if (outbox_.size() == 1) write();
  }

  void write() {
    ws_.text(true);
    ws_.async_write(asio::buffer(outbox_.front()),
                    [self = shared_from_this()](beast::error_code ec, std::size_t) {
                      if (ec) {
                        self->close();
                        return;
                      }
                      self->outbox_.pop_front();
                      if (!self->outbox_.empty()) self->write();
                    });
  }

  void close() {
    if (connected_) host_.disconnect(client_);
    connected_ = false;
  }

  websocket::stream<beast::tcp_stream> ws_;
  SessionHost& host_;
  beast::flat_buffer buffer_;
  std::deque<std::string> outbox_;
  SessionHost::ClientId client_ = 0;
  bool connected_ = false;
};

class HttpSession : public std::enable_shared_from_this<HttpSession> {
 public:
  HttpSession(tcp::socket socket, SessionHost& host, const std::filesystem::path& assets)
      : stream_(std::move(socket)), host_(host), assets_(assets) {}

  void start() { read(); }

 private:
  void read() {
    request_ = {};
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(stream_, buffer_, request_,
                     [self = shared_from_this()](beast::error_code ec, std::size_t) {
                       if (ec) return;
                       self->dispatch();
                     });
  }

  void dispatch() {
    if (websocket::is_upgrade(request_)) {
      stream_.expires_never();
      std::make_shared<WsSession>(stream_.release_socket(), host_)->start(std::move(request_));
      return;
    }
    auto response = std::make_shared<http::response<http::string_body>>(serve());
    http::async_write(stream_, *response,
                      [self = shared_from_this(), response](beast::error_code ec, std::size_t) {
                        if (ec || response->need_eof()) {
                          beast::error_code ignored;
                          self->stream_.socket().shutdown(tcp::socket::shutdown_send, ignored);
                          return;
                        }
                        self->read();
                      });
  }

  http::response<http::string_body> serve() const {
    http::response<http::string_body> res{http::status::ok, request_.version()};
    res.keep_alive(request_.keep_alive());
    std::string target(request_.target());
    if (const auto q = target.find('?'); q != std::string::npos) target.resize(q);
    if (request_.method() != http::verb::get || target.empty() || target.front() != '/' ||
        target.find("..") != std::string::npos) {
      res.result(http::status::bad_request);
      res.body() = "bad request";
      res.prepare_payload();
      return res;
    }
    if (target == "/") target = "/index.html";
    if (assets_.empty()) {
      if (target == "/index.html") {
        res.set(http::field::content_type, "text/html");
        res.body() = kStubPage;
      } else {
        res.result(http::status::not_found);
        res.body() = "not found";
      }
      res.prepare_payload();
      return res;
    }
    const auto path = assets_ / target.substr(1);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      res.result(http::status::not_found);
      res.body() = "not found";
    } else {
      std::ostringstream body;
      body << in.rdbuf();
      res.set(http::field::content_type, mime_type(path));
      res.body() = body.str();
    }
    res.prepare_payload();
    return res;
  }

  beast::tcp_stream stream_;
  SessionHost& host_;
  const std::filesystem::path& assets_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> request_;
};

}  // namespace

struct Server::Impl {
  Impl(SessionHost& h, ServerOptions o) : host(h), options(std::move(o)), acceptor(io) {
    const tcp::endpoint endpoint(asio::ip::make_address(options.address), options.port);
    acceptor.open(endpoint.protocol());
    acceptor.set_option(asio::socket_base::reuse_address(true));
    acceptor.bind(endpoint);
    acceptor.listen(asio::socket_base::max_listen_connections);
    accept();
  }

  void accept() {
    acceptor.async_accept(asio::make_strand(io), [this](beast::error_code ec, tcp::socket socket) {
      if (ec) return;
      std::make_shared<HttpSession>(std::move(socket), host, options.assets)->start();
      accept();
    });
  }

  SessionHost& host;
  ServerOptions options;
  asio::io_context io{1};
  tcp::acceptor acceptor;
  std::thread thread;
};

Server::Server(SessionHost& host, ServerOptions options)
    : impl_(std::make_unique<Impl>(host, std::move(options))) {}

Server::~Server() { stop(); }

std::uint16_t Server::port() const { return impl_->acceptor.local_endpoint().port(); }

void Server::start() {
  impl_->thread = std::thread([this] { impl_->io.run(); });
}

void Server::run(bool stop_on_signal) {
  asio::signal_set signals(impl_->io);
  if (stop_on_signal) {
    signals.add(SIGINT);
    signals.add(SIGTERM);
    signals.async_wait([this](beast::error_code ec, int) {
      if (!ec) impl_->io.stop();
    });
  }
  impl_->io.run();
}

void Server::stop() {
  impl_->io.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace chronofold::net
