#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "delisle/angles.hpp"
#include "delisle/params.hpp"
#include "delisle/projection.hpp"

namespace delisle {

/// Latitude/longitude box of the graticule. Lines are drawn at min, min +
/// step, ... up to max; a max that is not a whole number of steps away is
/// truncated.
struct RegionWindow {
  Angle lat_min, lat_max;
  Angle lon_min, lon_max;
  Angle lat_step = Angle::degrees(1.0);
  Angle lon_step = Angle::degrees(1.0);

  void validate() const;
};

struct Vertex {
  GeoPoint geo;
  PlanePoint plane;
};

struct Meridian {
  Angle lon;
  std::vector<Vertex> vertices;  ///< south to north, two points
};

struct ParallelArc {
  Angle lat;
  double radius;       ///< map units, centred on the apex
  double theta_start;  ///< plane angle of the western end (radians)
  double theta_end;
  std::vector<Vertex> vertices;  ///< west to east
};

struct Label {
  PlanePoint anchor;
  std::string text;
};

struct Graticule {
  std::vector<ParallelArc> parallels;  ///< south to north
  std::vector<Meridian> meridians;     ///< west to east
  std::vector<Label> labels;

  bool empty() const noexcept { return parallels.empty() && meridians.empty(); }
};

inline constexpr int kDefaultArcSegmentsPerDegree = 4;

/// Throws Error{out_of_cone} if the window wraps past the slit and
/// Error{beyond_apex} if a parallel would sit at or past the apex.
Graticule build_graticule(const ConicParams& params, const RegionWindow& win,
                          int arc_segments_per_degree = kDefaultArcSegmentsPerDegree);

struct SvgStyle {
  std::string stroke = "#000000";
  double stroke_width = 0.05;
  double font_size = 0.6;
  std::string label_fill = "#333333";
  double width_px = 1000.0;
};

/// SVG 1.1 document. North is up (plane y is negated on output); the
/// viewBox covers all geometry with a 2% margin. Output is byte-for-byte
/// deterministic. Throws Error{empty_geometry} for an empty graticule.
std::string write_svg(const Graticule& g, const SvgStyle& style = {});

enum class GeoJsonMode { projected, geographic };

/// FeatureCollection of LineStrings, one per parallel and meridian.
/// Geographic mode is RFC 7946 (lon, lat); projected mode carries plane
/// coordinates and a top-level "projection" member describing them.
std::string write_geojson(const Graticule& g, const ConicParams& params, GeoJsonMode mode);

/// Parses `lat,lon` CSV text (decimal degrees or DMS). Blank lines are
/// skipped. Throws Error{parse} naming the line and column of a bad row.
std::vector<GeoPoint> read_points_csv(std::string_view text);

/// Parses `x,y` CSV text of plane coordinates.
std::vector<PlanePoint> read_plane_csv(std::string_view text);

std::string write_plane_csv(const std::vector<PlanePoint>& points);
std::string write_points_csv(const std::vector<GeoPoint>& points);

}  // namespace delisle
