#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "delisle/error.hpp"
#include "delisle/graticule.hpp"

namespace delisle {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct Row {
  std::size_t line;
  std::vector<std::string_view> fields;
};

// Splits into non-blank rows; the first one must be the expected header.
std::vector<Row> rows_after_header(std::string_view text, std::string_view c0,
                                   std::string_view c1) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<Row> rows;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    for (std::size_t start = 0;;) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!header_seen) {
      if (fields.size() != 2 || fields[0] != c0 || fields[1] != c1)
        throw Error(ErrorKind::parse, fmt::format("line {}: expected header '{},{}'", line_no, c0, c1));
      header_seen = true;
      continue;
    }
    if (fields.size() != 2)
      throw Error(ErrorKind::parse,
                  fmt::format("line {}: expected 2 columns, found {}", line_no, fields.size()));
    rows.push_back({line_no, std::move(fields)});
  }
  if (!header_seen) throw Error(ErrorKind::parse, fmt::format("missing header '{},{}'", c0, c1));
  return rows;
}

double parse_number(std::string_view field, std::size_t line, int column, std::string_view name) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v))
    throw Error(ErrorKind::parse, fmt::format("line {}, column {} ({}): '{}' is not a number", line,
                                              column, name, field));
  return v;
}

}  // namespace

std::vector<GeoPoint> read_points_csv(std::string_view text) {
  std::vector<GeoPoint> points;
  for (const auto& row : rows_after_header(text, "lat", "lon")) {
    Angle lat, lon;
    for (int col = 0; col < 2; ++col) {
      try {
        (col == 0 ? lat : lon) = dms_parse(row.fields[static_cast<std::size_t>(col)]);
      } catch (const Error& e) {
        throw Error(ErrorKind::parse, fmt::format("line {}, column {} ({}): {}", row.line, col + 1,
                                                  col == 0 ? "lat" : "lon", e.what()));
      }
    }
    try {
      points.emplace_back(lat, lon);
    } catch (const Error& e) {
      throw Error(ErrorKind::parse,
                  fmt::format("line {}, column 1 (lat): {}", row.line, e.what()));
    }
  }
  return points;
}

std::vector<PlanePoint> read_plane_csv(std::string_view text) {
  std::vector<PlanePoint> points;
  for (const auto& row : rows_after_header(text, "x", "y"))
    points.push_back({parse_number(row.fields[0], row.line, 1, "x"),
                      parse_number(row.fields[1], row.line, 2, "y")});
  return points;
}

std::string write_plane_csv(const std::vector<PlanePoint>& points) {
  std::string out = "x,y\n";
  for (const auto& p : points) out += fmt::format("{:.9f},{:.9f}\n", p.x, p.y);
  return out;
}

std::string write_points_csv(const std::vector<GeoPoint>& points) {
  std::string out = "lat,lon\n";
  for (const auto& p : points) out += fmt::format("{:.9f},{:.9f}\n", p.lat().deg(), p.lon().deg());
  return out;
}

}  // namespace delisle
