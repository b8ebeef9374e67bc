#include <gtest/gtest.h>

#include <cstdlib>

#include <boost/asio/connect.hpp>
#include <boost/asio/ip/tcp.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <nlohmann/json.hpp>

#include "chronofold/net/server.hpp"
#include "chronofold/session/host.hpp"
#include "fixtures.hpp"

namespace cf = chronofold;
namespace net = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = net::ip::tcp;
using nlohmann::json;

namespace {

struct WsClient {
  net::io_context io;
  websocket::stream<tcp::socket> ws{io};

  explicit WsClient(std::uint16_t port) {
    tcp::resolver resolver(io);
    net::connect(ws.next_layer(), resolver.resolve("127.0.0.1", std::to_string(port)));
    ws.handshake("127.0.0.1", "/ws");
  }
  void send(const json& message) { ws.write(net::buffer(message.dump())); }
  json receive() {
    beast::flat_buffer buffer;
    ws.read(buffer);
    return json::parse(beast::buffers_to_string(buffer.data()));
  }
};

}  // namespace

TEST(Server, DefaultPortFromEnvironment) {
  ::unsetenv(cf::net::kPortEnv);
  EXPECT_EQ(cf::net::default_port(), cf::net::kDefaultPort);
  ::setenv(cf::net::kPortEnv, "9123", 1);
  EXPECT_EQ(cf::net::default_port(), 9123);
  ::setenv(cf::net::kPortEnv, "not-a-port", 1);
  EXPECT_EQ(cf::net::default_port(), cf::net::kDefaultPort);
  ::unsetenv(cf::net::kPortEnv);
}

TEST(Server, ServesStubPage) {
  cf::SessionHost host;
  cf::net::ServerOptions opts;
  opts.port = 0;
  cf::net::Server server(host, opts);
  server.start();

  net::io_context io;
  beast::tcp_stream stream(io);
  tcp::resolver resolver(io);
  stream.connect(resolver.resolve("127.0.0.1", std::to_string(server.port())));
  http::request<http::empty_body> req{http::verb::get, "/", 11};
  req.set(http::field::host, "127.0.0.1");
  http::write(stream, req);
  beast::flat_buffer buffer;
  http::response<http::string_body> res;
  http::read(stream, buffer, res);
  EXPECT_EQ(res.result(), http::status::ok);
  EXPECT_NE(res.body().find("<!doctype html>"), std::string::npos);
  server.stop();
}

TEST(Server, WebSocketRoundTrip) {
  cf::SessionHost host(cf::Session::from_records(cf::testing::lynx_records()));
  cf::net::ServerOptions opts;
  opts.port = 0;
  cf::net::Server server(host, opts);
  server.start();
  ASSERT_NE(server.port(), 0);

  WsClient a(server.port());
  WsClient b(server.port());
  a.send({{"type", "hello"}});
  const auto hello = a.receive();
  EXPECT_EQ(hello["type"], "hello");
  EXPECT_EQ(hello["loaded"], true);

  // Make sure b is registered before the broadcast.
  b.send({{"type", "hello"}});
  EXPECT_EQ(b.receive()["type"], "hello");

  a.send({{"type", "interact"}, {"op", "wrapX"}, {"steps", 75}, {"id", 1}});
  const auto da = a.receive();
  const auto db = b.receive();
  EXPECT_EQ(da, db);
  EXPECT_EQ(da["type"], "layerDiff");
  EXPECT_EQ(da["coords"]["x"][39], 1.0);

  a.send({{"type", "interact"}, {"op", "nope"}});
  EXPECT_EQ(a.receive()["type"], "error");
  server.stop();
}
