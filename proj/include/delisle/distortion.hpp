#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delisle/angles.hpp"
#include "delisle/params.hpp"

namespace delisle {

inline constexpr double kDefaultMilesPerDegree = 15.0;

/// Map length minus true length of one degree of the parallel at `x`, in
/// meridian degrees: alpha * omega * (90 - x + z) - cos x. Positive where the
/// mapped parallel is too long.
double error_at(Angle x, const ConicParams& params);

/// arcsin(omega): the unique critical point of the error curve, where the
/// shortfall is largest. Throws Error{no_interior_maximum} for omega > 1.
Angle max_error_latitude(const ConicParams& params);

/// Zeros of the error curve inside `bracket`, ascending. Bisection on each
/// side of arcsin(omega), converged to 1e-10 degrees. May be empty.
std::vector<Angle> standard_parallel_roots(const ConicParams& params,
                                           const RegionBounds& bracket);

inline double error_in_miles(double error, double miles_per_degree = kDefaultMilesPerDegree) {
  return error * miles_per_degree;
}

struct OracleGrid {
  int omega_points = 200;
  int z_points = 200;
  double lat_step_deg = 0.05;
  /// Zoom passes around the best cell after the full grid.
  int refinements = 6;

  static constexpr int kMinPointsPerAxis = 200;
  static constexpr double kMaxLatStep = 0.05;

  bool meets_contract() const noexcept {
    return omega_points >= kMinPointsPerAxis && z_points >= kMinPointsPerAxis &&
           lat_step_deg <= kMaxLatStep;
  }
};

struct OracleResult {
  double omega;
  Angle z;
  double sup_error;
  /// Search box actually scanned on the first pass.
  double omega_lo, omega_hi;
  Angle z_lo, z_hi;
  /// Error curve of the optimum at the bounds and at its interior minimum.
  double error_south;
  double error_interior;
  Angle interior_lat;
  double error_north;
};

/**
 * Brute-force minimax search for (omega, z) minimising the largest |e(x)|
 * over the region, sampled every `lat_step_deg` plus both endpoints.
 *
 * The first pass scans omega in [0.5, 1.5] and z in [0, 3] times the
 * closed-form refined values (z span at least one degree). Each refinement
 * re-scans a box of two cells around the incumbent. Ties keep the smaller
 * omega, then the smaller z, so the result does not depend on scan order.
 */
OracleResult minimax_oracle(const RegionBounds& rb, const OracleGrid& grid = {});

/// Largest |e| over a latitude sampling of the region (endpoints included).
double sup_error(const ConicParams& params, const RegionBounds& rb, double lat_step_deg);

struct DistortionSample {
  Angle lat;
  double error;          ///< meridian degrees
  double scale_factor;   ///< along the parallel
  double error_miles;
};

struct DistortionReport {
  ConicParams params;
  RegionBounds bounds;
  std::vector<DistortionSample> samples;
  std::optional<Angle> max_error_lat;  ///< arcsin(omega) when it lies in the region
  double max_error = 0.0;              ///< largest |e| over samples and extremum
  std::vector<Angle> roots;
  double miles_per_degree = kDefaultMilesPerDegree;
};

/// Samples at south, south + step, ... and always the northern bound.
DistortionReport build_report(const ConicParams& params, const RegionBounds& rb, Angle step,
                              double miles_per_degree = kDefaultMilesPerDegree);

/// Aligned plain-text table with a summary header.
std::string report_to_table(const DistortionReport& report);

/// CSV with columns lat_deg,e_meridian_deg,scale_factor,e_miles.
std::string report_to_csv(const DistortionReport& report);

}  // namespace delisle
