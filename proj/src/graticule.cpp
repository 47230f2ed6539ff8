#include "delisle/graticule.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "delisle/error.hpp"

namespace delisle {

namespace {

std::vector<Angle> line_positions(Angle lo, Angle hi, Angle step) {
  const auto n = static_cast<long>(std::floor((hi - lo).deg() / step.deg() + 1e-9));
  std::vector<Angle> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) out.push_back(lo + step * static_cast<double>(k));
  return out;
}

Vertex make_vertex(Angle lat, Angle lon, const ConicParams& params) {
  GeoPoint g(lat, lon);
  return {g, forward(g, params)};
}

}  // namespace

void RegionWindow::validate() const {
  for (Angle a : {lat_min, lat_max, lon_min, lon_max, lat_step, lon_step})
    if (!std::isfinite(a.deg()))
      throw Error(ErrorKind::invalid_argument, "graticule window values must be finite");
  if (!(lat_min < lat_max) || !(lon_min < lon_max))
    throw Error(ErrorKind::invalid_argument, "graticule window must have min < max on both axes");
  if (!(lat_step.deg() > 0.0) || !(lon_step.deg() > 0.0))
    throw Error(ErrorKind::invalid_argument, "graticule steps must be positive");
  if (lat_min.deg() < -90.0 || lat_max.deg() > 90.0)
    throw Error(ErrorKind::range, "graticule latitudes outside [-90, 90]");
}

Graticule build_graticule(const ConicParams& params, const RegionWindow& win,
                          int arc_segments_per_degree) {
  win.validate();
  params.validate();
  if (arc_segments_per_degree < 1)
    throw Error(ErrorKind::invalid_argument, "need at least one arc segment per degree");

  const double half_span =
      std::max(std::abs((win.lon_min - params.lambda0).deg()),
               std::abs((win.lon_max - params.lambda0).deg()));
  if (half_span * params.omega >= 180.0)
    throw Error(ErrorKind::out_of_cone,
                fmt::format("longitudes {}..{} wrap past the slit of a cone with omega = {}",
                            win.lon_min.deg(), win.lon_max.deg(), params.omega));
  const double apex_lat = 90.0 + params.z.deg();
  if (params.poleward(win.lat_min).deg() >= apex_lat ||
      params.poleward(win.lat_max).deg() >= apex_lat)
    throw Error(ErrorKind::beyond_apex, "graticule window reaches the apex");

  Graticule g;
  const auto lats = line_positions(win.lat_min, win.lat_max, win.lat_step);
  const auto lons = line_positions(win.lon_min, win.lon_max, win.lon_step);

  const Angle span = win.lon_max - win.lon_min;
  const int segments =
      std::max(1, static_cast<int>(std::ceil(span.deg() * arc_segments_per_degree - 1e-9)));
  for (Angle lat : lats) {
    ParallelArc arc{lat, parallel_radius(lat, params), meridian_angle(win.lon_min, params),
                    meridian_angle(win.lon_max, params), {}};
    arc.vertices.reserve(static_cast<std::size_t>(segments) + 1);
    for (int i = 0; i <= segments; ++i) {
      const Angle lon = i == segments ? win.lon_max : win.lon_min + span * (double(i) / segments);
      arc.vertices.push_back(make_vertex(lat, lon, params));
    }
    g.parallels.push_back(std::move(arc));
  }

  for (Angle lon : lons)
    g.meridians.push_back(
        {lon, {make_vertex(win.lat_min, lon, params), make_vertex(win.lat_max, lon, params)}});

  for (const auto& arc : g.parallels)
    g.labels.push_back({arc.vertices.front().plane, dms_format(arc.lat, DmsPrecision::minute)});
  for (const auto& m : g.meridians)
    g.labels.push_back({m.vertices.front().plane, dms_format(m.lon, DmsPrecision::minute)});
  return g;
}

}  // namespace delisle
