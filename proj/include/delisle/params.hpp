#pragma once

#include "delisle/angles.hpp"

namespace delisle {

/// Southern and northern bounding latitudes of the mapped region.
/// Construction enforces -90 <= south < north <= 90; the poles themselves are
/// admitted as limiting cases of the parameter formulas.
class RegionBounds {
 public:
  RegionBounds(Angle south, Angle north);

  Angle south() const noexcept { return south_; }
  Angle north() const noexcept { return north_; }
  Angle mid() const noexcept { return (south_ + north_) / 2.0; }

 private:
  Angle south_;
  Angle north_;
};

/// The two latitudes along which the map keeps the true length of a degree
/// of longitude. Construction enforces -90 <= p < q <= 90.
class StandardParallels {
 public:
  StandardParallels(Angle p, Angle q);

  Angle p() const noexcept { return p_; }
  Angle q() const noexcept { return q_; }

 private:
  Angle p_;
  Angle q_;
};

enum class Hemisphere { north, south };

/**
 * Full state of an equidistant conic projection.
 *
 * omega is the plane angle between the images of two meridians divided by
 * their true longitude difference. z is how far the apex lies beyond the
 * image of the pole, in meridian degrees. delta is the map length of one
 * meridian degree. For southern regions the apex sits beyond the South pole
 * and all latitudes are mirrored before the northern formulas apply.
 */
struct ConicParams {
  double omega = 1.0;
  Angle z;
  double delta = 1.0;
  Angle lambda0;
  Hemisphere hemisphere = Hemisphere::north;

  /// Throws Error{invalid_argument} unless omega > 0, delta > 0 and
  /// everything is finite. omega == 1 is the azimuthal limit.
  void validate() const;

  /// Latitude measured towards the apex pole (negated in the south).
  Angle poleward(Angle lat) const noexcept {
    return hemisphere == Hemisphere::north ? lat : -lat;
  }
};

enum class Solver { midpoint, refined };

// Derivations from two standard parallels. All throw Error{degenerate_cone}
// when cos p == cos q. When |p| > |q| the cone opens towards the South pole
// and the parallels are mirrored first.

/// |O′P′| in meridian degrees: (q - p) cos p / (cos p - cos q).
Angle apex_distance_from_parallels(const StandardParallels& sp);
double cone_constant_from_parallels(const StandardParallels& sp);
/// apex_distance_from_parallels - (90 - p).
Angle apex_offset_from_parallels(const StandardParallels& sp);

// Derivations from the region's bounding latitudes (equal error at both
// extremities). Regions straddling the equator throw Error{degenerate_region};
// southern regions are mirrored.

double cone_constant_from_bounds(const RegionBounds& rb);

/// Apex offset making the error at the midpoint latitude equal in size and
/// opposite in sign to the error at the bounds.
Angle apex_offset_from_bounds(const RegionBounds& rb);

struct RefinedOffset {
  Angle x_star;  ///< latitude of largest shortfall, arcsin(omega)
  Angle z;
};

/// Apex offset balancing the bound error against the true extremum of the
/// error curve at arcsin(omega). Throws Error{no_interior_maximum} if
/// omega > 1.
RefinedOffset refined_apex_offset(const RegionBounds& rb);

/// Same as above with an externally supplied cone constant.
RefinedOffset refined_apex_offset(const RegionBounds& rb, double omega);

/// (b - a)(cos p - cos q) - (q - p)(cos a - cos b); zero when the errors at
/// both extremities of the region match exactly.
double equal_error_residual(const RegionBounds& rb, const StandardParallels& sp);

/// The two members of the residual above, in that order.
struct EqualErrorMembers {
  double bounds_member;
  double parallels_member;
};
EqualErrorMembers equal_error_members(const RegionBounds& rb, const StandardParallels& sp);

ConicParams params_from_parallels(const StandardParallels& sp, double delta = 1.0,
                                  Angle lambda0 = {});

struct BoundsDerivation {
  ConicParams params;
  Solver solver_used;
  Angle x_star;       ///< arcsin(omega), mirrored back for southern regions
  bool fell_back = false;  ///< refined solver was requested but omega > 1
};

/// Builds the parameters from bounds with the requested solver. A refined
/// request with omega > 1 falls back to the midpoint solver and says so.
BoundsDerivation params_from_bounds(const RegionBounds& rb, Solver solver = Solver::refined,
                                    double delta = 1.0, Angle lambda0 = {});

}  // namespace delisle
