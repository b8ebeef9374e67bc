// Command line driver: load data, run interaction scripts, export results
// or serve the session to UI clients. Subcommands chain left to right:
//
//   chronofold load data/lynx.csv script demo.txt export-coords out.csv
//   chronofold load flu.csv --long serve --port 9000

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chronofold/model/errors.hpp"
#include "chronofold/net/server.hpp"
#include "chronofold/session/export.hpp"
#include "chronofold/session/host.hpp"

namespace cf = chronofold;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cf::Error("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

cf::Session& require(std::optional<cf::Session>& session, const char* command) {
  if (!session) throw cf::Error(std::string(command) + ": no data loaded (use 'load' first)");
  return *session;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chronofold: interactive temporal data wrangling"};
  app.require_subcommand(1, 0);

  std::string csv_path;
  bool wide = false;
  bool long_layout = false;
  auto* load = app.add_subcommand("load", "Load a wide or long CSV file");
  load->add_option("csv", csv_path, "CSV file")->required()->check(CLI::ExistingFile);
  auto* wide_flag = load->add_flag("--wide", wide, "First column is time, others are variables");
  load->add_flag("--long", long_layout, "Columns time, variable, value[, individual]")
      ->excludes(wide_flag);
  std::size_t bins = 10;
  load->add_option("--bins", bins, "Histogram bins of the linked value view")
      ->check(CLI::PositiveNumber);

  std::string script_path;
  auto* script = app.add_subcommand("script", "Run an interaction script");
  script->add_option("file", script_path, "Script file")->required()->check(CLI::ExistingFile);

  std::string reload_path;
  auto* reload = app.add_subcommand("reload-coords", "Make an exported coordinate file the baseline");
  reload->add_option("file", reload_path, "Coordinate CSV")->required()->check(CLI::ExistingFile);

  std::string coords_path;
  auto* coords = app.add_subcommand("export-coords", "Write the coordinate table as CSV");
  coords->add_option("file", coords_path, "Output file ('-' for stdout)")->required();

  std::string svg_path;
  auto* svg = app.add_subcommand("export-svg", "Write a static SVG of the time plot");
  svg->add_option("file", svg_path, "Output file ('-' for stdout)")->required();

  std::uint16_t port = cf::net::default_port();
  std::string address = "127.0.0.1";
  std::string assets;
  auto* serve = app.add_subcommand("serve", "Serve the session over HTTP/WebSocket");
  serve->add_option("--port", port, "Port (default from CHRONOFOLD_PORT, else 8080)");
  serve->add_option("--address", address, "Listen address");
  serve->add_option("--assets", assets, "Static UI bundle directory")->check(CLI::ExistingDirectory);

  for (auto* sub : {load, script, reload, coords, svg, serve}) sub->fallthrough(false);

  CLI11_PARSE(app, argc, argv);

  std::optional<cf::Session> session;
  const auto write = [](const std::string& path, const std::string& text) {
    if (path == "-") {
      std::cout << text;
    } else {
      cf::write_text(path, text);
    }
  };

  try {
    for (auto* sub : app.get_subcommands()) {
      if (sub == load) {
        const auto layout = wide          ? cf::CsvLayout::wide
                            : long_layout ? cf::CsvLayout::longFormat
                                          : cf::CsvLayout::automatic;
        cf::SessionOptions options;
        options.histogram_bins = bins;
        session.emplace(cf::Session::from_csv(csv_path, layout, options));
        std::cerr << "loaded " << session->table().size() << " points in "
                  << session->table().series_count() << " series\n";
      } else if (sub == script) {
        auto& s = require(session, "script");
        const auto outcome = s.run_script(slurp(script_path));
        for (const auto& w : outcome.warnings) std::cerr << "warning: " << w << '\n';
        if (!outcome.ok()) {
          std::cerr << "script stopped at command " << *outcome.failed_index + 1 << ": "
                    << outcome.error << '\n';
          return 2;
        }
        std::cerr << "applied " << outcome.applied << " commands\n";
      } else if (sub == reload) {
        cf::reload_coordinates(require(session, "reload-coords"), cf::read_coordinates(reload_path));
      } else if (sub == coords) {
        write(coords_path, cf::export_coordinates(require(session, "export-coords")));
      } else if (sub == svg) {
        write(svg_path, cf::export_svg(require(session, "export-svg")));
      } else if (sub == serve) {
        cf::SessionHost host(std::move(session));
        session.reset();
        cf::net::ServerOptions options;
        options.address = address;
        options.port = port;
        options.assets = assets;
        cf::net::Server server(host, options);
        std::cerr << "listening on http://" << address << ':' << server.port() << '\n';
        server.run(true);
      }
    }
  } catch (const cf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
