#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "chronofold/layers/svg.hpp"
#include "chronofold/session/session.hpp"

namespace chronofold {

/// Rows of a coordinate export, one per point id.
struct CoordinateExport {
  std::vector<std::size_t> point_id;
  std::vector<double> x0, y0, x, y;
  std::vector<int> wrap, variable, individual, series, line;
  std::vector<bool> brushed;
  std::vector<std::string> color;

  std::size_t size() const { return point_id.size(); }
};

inline constexpr const char* kCoordinateHeader =
    "pointId,x0,y0,x,y,l_wrap,l_variable,l_individual,l_series,l_line,brushed,color";

CoordinateExport collect_coordinates(const Session& session);

/// CSV with kCoordinateHeader; numbers use the shortest round-trip form so
/// equal states give byte-identical files.
std::string format_coordinates(const CoordinateExport& rows);
std::string export_coordinates(const Session& session);

CoordinateExport parse_coordinates(std::istream& in);
CoordinateExport read_coordinates(const std::filesystem::path& path);

/// Makes an export the session's new baseline.
void reload_coordinates(Session& session, const CoordinateExport& rows);

/// SVG of the time plot sized by the session's banked aspect ratio.
std::string export_svg(const Session& session, SvgOptions options = {});

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace chronofold
