#pragma once

#include "delisle/angles.hpp"
#include "delisle/params.hpp"

namespace delisle {

/// A point on the sphere. Latitude is checked to lie in [-90, 90];
/// longitude is unwrapped and only needs to be finite.
class GeoPoint {
 public:
  GeoPoint(Angle lat, Angle lon);

  Angle lat() const noexcept { return lat_; }
  Angle lon() const noexcept { return lon_; }

 private:
  Angle lat_;
  Angle lon_;
};

/// Plane coordinates in map units (delta per meridian degree). The apex is
/// the origin, x grows east and y grows north, so a northern map lies
/// below the origin.
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

/// Radius of the image of a parallel, delta * (90 - lat + z).
double parallel_radius(Angle lat, const ConicParams& params);

/// Plane angle of the image of a meridian, measured from the central
/// meridian, eastwards positive (radians).
double meridian_angle(Angle lon, const ConicParams& params);

/// Throws Error{beyond_apex} when the latitude lies at or past the apex.
PlanePoint forward(const GeoPoint& g, const ConicParams& params);

/// Exact inverse of forward. Throws Error{apex_singularity} at the origin
/// and Error{out_of_cone} on the ray straight through the slit.
GeoPoint inverse(const PlanePoint& pt, const ConicParams& params);

/// Map length over true length along the parallel; the scale along every
/// meridian is exactly 1. Throws Error{pole_degeneracy} at |lat| = 90.
double parallel_scale_factor(Angle lat, const ConicParams& params);

inline constexpr double kMeridianScaleFactor = 1.0;

}  // namespace delisle
