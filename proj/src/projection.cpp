#include "delisle/projection.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "delisle/error.hpp"

namespace delisle {

GeoPoint::GeoPoint(Angle lat, Angle lon) : lat_(lat), lon_(lon) {
  if (!std::isfinite(lat.deg()) || !std::isfinite(lon.deg()))
    throw Error(ErrorKind::invalid_argument, "geographic coordinates must be finite");
  if (lat.deg() < -90.0 || lat.deg() > 90.0)
    throw Error(ErrorKind::range, "latitude " + std::to_string(lat.deg()) + " outside [-90, 90]");
}

double parallel_radius(Angle lat, const ConicParams& params) {
  return params.delta * (90.0 - params.poleward(lat).deg() + params.z.deg());
}

double meridian_angle(Angle lon, const ConicParams& params) {
  return kAlpha * params.omega * (lon - params.lambda0).deg();
}

PlanePoint forward(const GeoPoint& g, const ConicParams& params) {
  if (params.poleward(g.lat()).deg() >= 90.0 + params.z.deg())
    throw Error(ErrorKind::beyond_apex,
                "latitude " + std::to_string(g.lat().deg()) + " lies at or beyond the apex");
  const double rho = parallel_radius(g.lat(), params);
  const double theta = meridian_angle(g.lon(), params);
  // Southern maps are the mirror image of the northern construction.
  const double sign = params.hemisphere == Hemisphere::north ? 1.0 : -1.0;
  return {rho * std::sin(theta), -sign * rho * std::cos(theta)};
}

GeoPoint inverse(const PlanePoint& pt, const ConicParams& params) {
  const double rho = std::hypot(pt.x, pt.y);
  if (rho == 0.0) throw Error(ErrorKind::apex_singularity, "the apex has no unique preimage");
  const double sign = params.hemisphere == Hemisphere::north ? 1.0 : -1.0;
  const double theta = std::atan2(pt.x, -sign * pt.y);
  if (std::abs(theta) >= std::numbers::pi)
    throw Error(ErrorKind::out_of_cone, "point lies on the slit opposite the central meridian");
  const Angle poleward = Angle::degrees(90.0 + params.z.deg() - rho / params.delta);
  const Angle lat = params.hemisphere == Hemisphere::north ? poleward : -poleward;
  const Angle lon = params.lambda0 + Angle::radians(theta / params.omega);
  return GeoPoint(lat, lon);
}

double parallel_scale_factor(Angle lat, const ConicParams& params) {
  if (std::abs(lat.deg()) >= 90.0)
    throw Error(ErrorKind::pole_degeneracy, "a pole has no parallel to compare against");
  const Angle x = params.poleward(lat);
  return kAlpha * params.omega * (90.0 - x.deg() + params.z.deg()) / x.cos();
}

}  // namespace delisle
