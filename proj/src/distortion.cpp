#include "delisle/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "delisle/error.hpp"
#include "delisle/projection.hpp"

namespace delisle {

namespace {

constexpr double kRootTolerance = 1e-10;

// Region bounds as latitudes towards the apex pole, ascending.
std::pair<double, double> poleward_interval(const RegionBounds& rb, Hemisphere h) {
  if (h == Hemisphere::north) return {rb.south().deg(), rb.north().deg()};
  return {-rb.north().deg(), -rb.south().deg()};
}

double raw_error(double x_deg, double omega, double z_deg) {
  return kAlpha * omega * (90.0 - x_deg + z_deg) - std::cos(x_deg * kAlpha);
}

std::vector<double> latitude_samples(double lo, double hi, double step) {
  std::vector<double> xs;
  for (long k = 0;; ++k) {
    const double x = lo + static_cast<double>(k) * step;
    if (x >= hi - 1e-9) break;
    xs.push_back(x);
  }
  xs.push_back(hi);
  return xs;
}

double bisect(double lo, double hi, double omega, double z) {
  double flo = raw_error(lo, omega, z);
  while (hi - lo > kRootTolerance * 0.5) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = raw_error(mid, omega, z);
    if (fmid == 0.0) return mid;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void roots_on_monotone_piece(double lo, double hi, double omega, double z,
                             std::vector<double>& out) {
  if (!(lo < hi)) return;
  const double flo = raw_error(lo, omega, z), fhi = raw_error(hi, omega, z);
  if (flo == 0.0) out.push_back(lo);
  if (fhi == 0.0) out.push_back(hi);
  if (flo != 0.0 && fhi != 0.0 && (flo < 0) != (fhi < 0)) out.push_back(bisect(lo, hi, omega, z));
}

}  // namespace

double error_at(Angle x, const ConicParams& params) {
  return raw_error(params.poleward(x).deg(), params.omega, params.z.deg());
}

Angle max_error_latitude(const ConicParams& params) {
  if (params.omega > 1.0)
    throw Error(ErrorKind::no_interior_maximum,
                fmt::format("cone constant {} exceeds 1; sin x = omega has no solution",
                            params.omega));
  const Angle x = Angle::radians(std::asin(params.omega));
  return params.hemisphere == Hemisphere::north ? x : -x;
}

std::vector<Angle> standard_parallel_roots(const ConicParams& params,
                                           const RegionBounds& bracket) {
  const auto [lo, hi] = poleward_interval(bracket, params.hemisphere);
  const double omega = params.omega, z = params.z.deg();

  std::vector<double> found;
  if (omega >= 1.0) {
    roots_on_monotone_piece(lo, hi, omega, z, found);
  } else {
    // e is convex with its minimum at arcsin(omega): monotone on either side.
    const double crit = std::asin(omega) / kAlpha;
    roots_on_monotone_piece(lo, std::min(hi, crit), omega, z, found);
    roots_on_monotone_piece(std::max(lo, crit), hi, omega, z, found);
  }

  std::vector<Angle> roots;
  for (double r : found)
    roots.push_back(Angle::degrees(params.hemisphere == Hemisphere::north ? r : -r));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](Angle a, Angle b) { return std::abs((a - b).deg()) < kRootTolerance; }),
              roots.end());
  return roots;
}

double sup_error(const ConicParams& params, const RegionBounds& rb, double lat_step_deg) {
  const auto [lo, hi] = poleward_interval(rb, params.hemisphere);
  double worst = 0.0;
  for (double x : latitude_samples(lo, hi, lat_step_deg))
    worst = std::max(worst, std::abs(raw_error(x, params.omega, params.z.deg())));
  return worst;
}

OracleResult minimax_oracle(const RegionBounds& rb, const OracleGrid& grid) {
  if (grid.omega_points < 2 || grid.z_points < 2 || !(grid.lat_step_deg > 0.0))
    throw Error(ErrorKind::invalid_argument, "oracle grid needs >= 2 points per axis and a positive step");

  const auto reference = params_from_bounds(rb, Solver::refined);
  const auto [lo, hi] = poleward_interval(rb, reference.params.hemisphere);

  std::vector<double> xs = latitude_samples(lo, hi, grid.lat_step_deg);
  std::vector<double> offset(xs.size()), cosines(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    offset[i] = kAlpha * (90.0 - xs[i]);
    cosines[i] = std::cos(xs[i] * kAlpha);
  }
  auto objective = [&](double omega, double z) {
    const double zr = kAlpha * z;
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      worst = std::max(worst, std::abs(omega * (offset[i] + zr) - cosines[i]));
    return worst;
  };

  const double omega_ref = reference.params.omega;
  const double z_ref = reference.params.z.deg();
  OracleResult out{};
  out.omega_lo = 0.5 * omega_ref;
  out.omega_hi = 1.5 * omega_ref;
  out.z_lo = Angle::degrees(0.0);
  out.z_hi = Angle::degrees(std::max(3.0 * z_ref, 1.0));

  double w_lo = out.omega_lo, w_hi = out.omega_hi;
  double z_lo = out.z_lo.deg(), z_hi = out.z_hi.deg();
  double best = std::numeric_limits<double>::infinity(), best_w = w_lo, best_z = z_lo;

  for (int pass = 0; pass <= grid.refinements; ++pass) {
    const double dw = (w_hi - w_lo) / (grid.omega_points - 1);
    const double dz = (z_hi - z_lo) / (grid.z_points - 1);
    for (int i = 0; i < grid.omega_points; ++i) {
      const double w = w_lo + i * dw;
      for (int j = 0; j < grid.z_points; ++j) {
        const double z = z_lo + j * dz;
        const double f = objective(w, z);
        if (f < best || (f == best && (w < best_w || (w == best_w && z < best_z)))) {
          best = f;
          best_w = w;
          best_z = z;
        }
      }
    }
    w_lo = best_w - 4 * dw;
    w_hi = best_w + 4 * dw;
    z_lo = best_z - 4 * dz;
    z_hi = best_z + 4 * dz;
  }

  out.omega = best_w;
  out.z = Angle::degrees(best_z);
  out.sup_error = best;
  out.error_south = raw_error(lo, best_w, best_z);
  out.error_north = raw_error(hi, best_w, best_z);
  const double interior = std::clamp(best_w < 1.0 ? std::asin(best_w) / kAlpha : 90.0, lo, hi);
  out.error_interior = raw_error(interior, best_w, best_z);
  out.interior_lat = Angle::degrees(reference.params.hemisphere == Hemisphere::north ? interior
                                                                                     : -interior);
  if (reference.params.hemisphere == Hemisphere::south) std::swap(out.error_south, out.error_north);
  return out;
}

DistortionReport build_report(const ConicParams& params, const RegionBounds& rb, Angle step,
                              double miles_per_degree) {
  if (!(step.deg() > 0.0))
    throw Error(ErrorKind::invalid_argument, "report step must be positive");
  if (!(miles_per_degree > 0.0))
    throw Error(ErrorKind::invalid_argument, "miles per degree must be positive");

  DistortionReport report{params, rb, {}, std::nullopt, 0.0, {}, miles_per_degree};
  for (double lat : latitude_samples(rb.south().deg(), rb.north().deg(), step.deg())) {
    const Angle x = Angle::degrees(lat);
    const double e = error_at(x, params);
    report.samples.push_back({x, e, parallel_scale_factor(x, params),
                              error_in_miles(e, miles_per_degree)});
    report.max_error = std::max(report.max_error, std::abs(e));
  }
  if (params.omega <= 1.0) {
    const Angle x_star = max_error_latitude(params);
    if (rb.south() <= x_star && x_star <= rb.north()) {
      report.max_error_lat = x_star;
      report.max_error = std::max(report.max_error, std::abs(error_at(x_star, params)));
    }
  }
  report.roots = standard_parallel_roots(params, rb);
  return report;
}

std::string report_to_table(const DistortionReport& r) {
  std::string out;
  out += fmt::format("# omega = {:.9f}  z = {:.9f} deg ({})  delta = {}  lambda0 = {} deg\n",
                     r.params.omega, r.params.z.deg(), dms_format(r.params.z), r.params.delta,
                     r.params.lambda0.deg());
  if (r.max_error_lat)
    out += fmt::format("# extremum at {:.9f} deg ({}), e = {:.9f}\n", r.max_error_lat->deg(),
                       dms_format(*r.max_error_lat), error_at(*r.max_error_lat, r.params));
  out += fmt::format("# max |e| = {:.9f} meridian deg = {:.9f} miles ({} miles/deg)\n", r.max_error,
                     error_in_miles(r.max_error, r.miles_per_degree), r.miles_per_degree);
  out += "# roots:";
  if (r.roots.empty()) out += " none";
  for (Angle root : r.roots) out += fmt::format(" {:.9f} ({})", root.deg(), dms_format(root));
  out += "\n";
  out += fmt::format("{:>14} {:>16} {:>14} {:>14}\n", "lat_deg", "e_meridian_deg", "scale_factor",
                     "e_miles");
  for (const auto& s : r.samples)
    out += fmt::format("{:>14.6f} {:>16.9f} {:>14.9f} {:>14.9f}\n", s.lat.deg(), s.error,
                       s.scale_factor, s.error_miles);
  return out;
}

std::string report_to_csv(const DistortionReport& r) {
  std::string out = "lat_deg,e_meridian_deg,scale_factor,e_miles\n";
  for (const auto& s : r.samples)
    out += fmt::format("{:.9f},{:.9f},{:.9f},{:.9f}\n", s.lat.deg(), s.error, s.scale_factor,
                       s.error_miles);
  return out;
}

}  // namespace delisle
