#include "chronofold/session/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "chronofold/model/errors.hpp"
#include "chronofold/session/csv.hpp"

namespace chronofold {

namespace {

void put(std::string& out, double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

template <class T>
T cell(const CsvTable& csv, std::size_t row, std::size_t col) {
  const std::string& text = csv.rows[row][col];
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("line " + std::to_string(csv.line_numbers[row]) + ": bad value '" + text +
                         "' in column " + csv.header[col],
                     csv.line_numbers[row]);
  }
  return v;
}

}  // namespace

CoordinateExport collect_coordinates(const Session& session) {
  const auto& c = session.coords();
  const auto attrs = session.table().attributes();
  CoordinateExport rows;
  for (std::size_t i = 0; i < c.size(); ++i) {
    rows.point_id.push_back(i);
    rows.x0.push_back(c.x0[i]);
    rows.y0.push_back(c.y0[i]);
    rows.x.push_back(c.x[i]);
    rows.y.push_back(c.y[i]);
    rows.wrap.push_back(c.groups.wrap[i]);
    rows.variable.push_back(c.groups.variable[i]);
    rows.individual.push_back(c.groups.individual[i]);
    rows.series.push_back(c.groups.series[i]);
    rows.line.push_back(c.groups.line[i]);
    rows.brushed.push_back(attrs[i].brushed);
    rows.color.push_back(attrs[i].color);
  }
  return rows;
}

std::string format_coordinates(const CoordinateExport& rows) {
  std::string out = kCoordinateHeader;
  out += '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += std::to_string(rows.point_id[i]);
    for (double v : {rows.x0[i], rows.y0[i], rows.x[i], rows.y[i]}) {
      out += ',';
      put(out, v);
    }
    for (int g : {rows.wrap[i], rows.variable[i], rows.individual[i], rows.series[i],
                  rows.line[i]}) {
      out += ',';
      out += std::to_string(g);
    }
    out += rows.brushed[i] ? ",1," : ",0,";
    out += rows.color[i];
    out += '\n';
  }
  return out;
}

std::string export_coordinates(const Session& session) {
  return format_coordinates(collect_coordinates(session));
}

CoordinateExport parse_coordinates(std::istream& in) {
  const CsvTable csv = read_csv(in);
  std::ostringstream header;
  for (std::size_t k = 0; k < csv.header.size(); ++k) header << (k ? "," : "") << csv.header[k];
  if (header.str() != kCoordinateHeader) {
    throw ParseError("coordinate file header must be '" + std::string(kCoordinateHeader) + "'", 1);
  }
  CoordinateExport rows;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    rows.point_id.push_back(cell<std::size_t>(csv, r, 0));
    rows.x0.push_back(cell<double>(csv, r, 1));
    rows.y0.push_back(cell<double>(csv, r, 2));
    rows.x.push_back(cell<double>(csv, r, 3));
    rows.y.push_back(cell<double>(csv, r, 4));
    rows.wrap.push_back(cell<int>(csv, r, 5));
    rows.variable.push_back(cell<int>(csv, r, 6));
    rows.individual.push_back(cell<int>(csv, r, 7));
    rows.series.push_back(cell<int>(csv, r, 8));
    rows.line.push_back(cell<int>(csv, r, 9));
    rows.brushed.push_back(cell<int>(csv, r, 10) != 0);
    rows.color.push_back(csv.rows[r][11]);
  }
  return rows;
}

CoordinateExport read_coordinates(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return parse_coordinates(in);
}

void reload_coordinates(Session& session, const CoordinateExport& rows) {
  const std::size_t n = session.table().size();
  if (rows.size() != n) {
    throw IngestError("coordinate file has " + std::to_string(rows.size()) +
                      " rows, session has " + std::to_string(n));
  }
  std::vector<double> x(n), y(n);
  std::vector<int> lines(n);
  std::vector<bool> brushed(n);
  std::vector<std::string> colors(n);
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t id = rows.point_id[r];
    if (id >= n || seen[id]) {
      throw IngestError("coordinate file has an invalid or repeated pointId " + std::to_string(id));
    }
    seen[id] = true;
    x[id] = rows.x[r];
    y[id] = rows.y[r];
    lines[id] = rows.line[r];
    brushed[id] = rows.brushed[r];
    colors[id] = rows.color[r];
  }
  session.reload_baseline(x, y, lines, brushed, colors);
}

std::string export_svg(const Session& session, SvgOptions options) {
  const double aspect = std::clamp(session.aspect(), 0.5, 5.0);
  options.width = static_cast<int>(std::lround(options.height * aspect));
  return render_svg(session.layers(), options);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace chronofold
