#include <cmath>

#include <nlohmann/json.hpp>

#include "delisle/graticule.hpp"

namespace delisle {

namespace {

using json = nlohmann::ordered_json;

// Nine decimals keep projected vertices invertible to well below 1e-7 deg.
double rounded(double v) {
  const double r = std::round(v * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

json line(const std::vector<Vertex>& vertices, GeoJsonMode mode) {
  json coords = json::array();
  for (const auto& v : vertices) {
    if (mode == GeoJsonMode::geographic)
      coords.push_back({rounded(v.geo.lon().deg()), rounded(v.geo.lat().deg())});
    else
      coords.push_back({rounded(v.plane.x), rounded(v.plane.y)});
  }
  return {{"type", "LineString"}, {"coordinates", std::move(coords)}};
}

}  // namespace

std::string write_geojson(const Graticule& g, const ConicParams& params, GeoJsonMode mode) {
  json features = json::array();
  for (const auto& p : g.parallels)
    features.push_back({{"type", "Feature"},
                        {"properties",
                         {{"kind", "parallel"},
                          {"lat_deg", p.lat.deg()},
                          {"label", dms_format(p.lat, DmsPrecision::minute)}}},
                        {"geometry", line(p.vertices, mode)}});
  for (const auto& m : g.meridians)
    features.push_back({{"type", "Feature"},
                        {"properties",
                         {{"kind", "meridian"},
                          {"lon_deg", m.lon.deg()},
                          {"label", dms_format(m.lon, DmsPrecision::minute)}}},
                        {"geometry", line(m.vertices, mode)}});

  json doc = {{"type", "FeatureCollection"}};
  if (mode == GeoJsonMode::projected) {
    doc["projection"] = {
        {"name", "equidistant conic (Delisle)"},
        {"omega", params.omega},
        {"z_deg", params.z.deg()},
        {"delta", params.delta},
        {"lambda0_deg", params.lambda0.deg()},
        {"hemisphere", params.hemisphere == Hemisphere::north ? "north" : "south"},
        {"note",
         "coordinates are projected plane map units with the apex at the origin, "
         "not RFC 7946 longitude/latitude"}};
  }
  doc["features"] = std::move(features);
  return doc.dump(1) + "\n";
}

}  // namespace delisle
