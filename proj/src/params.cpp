#include "delisle/params.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "delisle/error.hpp"

namespace delisle {

namespace {

void check_latitude_pair(Angle lo, Angle hi, const char* what) {
  if (!std::isfinite(lo.deg()) || !std::isfinite(hi.deg()))
    throw Error(ErrorKind::invalid_argument, std::string(what) + ": latitudes must be finite");
  if (lo.deg() < -90.0 || hi.deg() > 90.0)
    throw Error(ErrorKind::invalid_argument, std::string(what) + ": latitudes outside [-90, 90]");
  if (!(lo < hi))
    throw Error(lo == hi ? ErrorKind::degenerate_region : ErrorKind::invalid_argument,
                std::string(what) + ": southern latitude must be below the northern one");
}

// Parallels as seen from the apex pole, plus which pole that is.
struct OrientedParallels {
  Angle p, q;
  Hemisphere hemisphere;
};

OrientedParallels orient(const StandardParallels& sp) {
  const double cp = sp.p().cos(), cq = sp.q().cos();
  if (cp == cq)
    throw Error(ErrorKind::degenerate_cone,
                "standard parallels " + std::to_string(sp.p().deg()) + " and " +
                    std::to_string(sp.q().deg()) + " have equal cosines; no cone through them");
  if (cp > cq) return {sp.p(), sp.q(), Hemisphere::north};
  return {-sp.q(), -sp.p(), Hemisphere::south};
}

struct OrientedBounds {
  Angle a, b;
  Hemisphere hemisphere;
};

OrientedBounds orient(const RegionBounds& rb) {
  const Angle a = rb.south(), b = rb.north();
  if (a.deg() >= 0.0) return {a, b, Hemisphere::north};
  if (b.deg() <= 0.0) return {-b, -a, Hemisphere::south};
  throw Error(ErrorKind::degenerate_region,
              "region straddles the equator; derive parameters from standard parallels instead");
}

double omega_between(Angle lo, Angle hi) {
  return (lo.cos() - hi.cos()) / (kAlpha * (hi - lo).deg());
}

Angle refined_z(Angle a, Angle x_star, double omega) {
  return Angle::degrees(
      0.5 * ((a.cos() + x_star.cos()) / (kAlpha * omega) - 180.0 + a.deg() + x_star.deg()));
}

Angle midpoint_z(Angle a, Angle b, double omega) {
  const Angle mid = (a + b) / 2.0;
  return Angle::degrees(
      0.5 * ((a.cos() + mid.cos()) / (kAlpha * omega) - 180.0 + 1.5 * a.deg() + 0.5 * b.deg()));
}

}  // namespace

RegionBounds::RegionBounds(Angle south, Angle north) : south_(south), north_(north) {
  check_latitude_pair(south, north, "region bounds");
}

StandardParallels::StandardParallels(Angle p, Angle q) : p_(p), q_(q) {
  check_latitude_pair(p, q, "standard parallels");
}

void ConicParams::validate() const {
  if (!std::isfinite(omega) || !(omega > 0.0))
    throw Error(ErrorKind::invalid_argument, "cone constant must be positive");
  if (!std::isfinite(delta) || !(delta > 0.0))
    throw Error(ErrorKind::invalid_argument, "degree length must be positive");
  if (!std::isfinite(z.deg()) || !std::isfinite(lambda0.deg()))
    throw Error(ErrorKind::invalid_argument, "apex offset and central meridian must be finite");
}

Angle apex_distance_from_parallels(const StandardParallels& sp) {
  const auto [p, q, hemisphere] = orient(sp);
  return Angle::degrees((q - p).deg() * p.cos() / (p.cos() - q.cos()));
}

double cone_constant_from_parallels(const StandardParallels& sp) {
  const auto [p, q, hemisphere] = orient(sp);
  return omega_between(p, q);
}

Angle apex_offset_from_parallels(const StandardParallels& sp) {
  const auto oriented = orient(sp);
  return apex_distance_from_parallels(sp) - (Angle::degrees(90.0) - oriented.p);
}

double cone_constant_from_bounds(const RegionBounds& rb) {
  const auto [a, b, hemisphere] = orient(rb);
  return omega_between(a, b);
}

Angle apex_offset_from_bounds(const RegionBounds& rb) {
  const auto [a, b, hemisphere] = orient(rb);
  return midpoint_z(a, b, omega_between(a, b));
}

RefinedOffset refined_apex_offset(const RegionBounds& rb) {
  return refined_apex_offset(rb, cone_constant_from_bounds(rb));
}

RefinedOffset refined_apex_offset(const RegionBounds& rb, double omega) {
  const auto [a, b, hemisphere] = orient(rb);
  if (!(omega > 0.0))
    throw Error(ErrorKind::invalid_argument, "cone constant must be positive");
  if (omega > 1.0)
    throw Error(ErrorKind::no_interior_maximum,
                "cone constant " + std::to_string(omega) +
                    " exceeds 1; the error curve has no interior extremum");
  const Angle x_star = Angle::radians(std::asin(omega));
  const Angle z = refined_z(a, x_star, omega);
  return {hemisphere == Hemisphere::north ? x_star : -x_star, z};
}

EqualErrorMembers equal_error_members(const RegionBounds& rb, const StandardParallels& sp) {
  const Angle a = rb.south(), b = rb.north(), p = sp.p(), q = sp.q();
  return {(b - a).deg() * (p.cos() - q.cos()), (q - p).deg() * (a.cos() - b.cos())};
}

double equal_error_residual(const RegionBounds& rb, const StandardParallels& sp) {
  const auto m = equal_error_members(rb, sp);
  return m.bounds_member - m.parallels_member;
}

ConicParams params_from_parallels(const StandardParallels& sp, double delta, Angle lambda0) {
  const auto oriented = orient(sp);
  ConicParams params{cone_constant_from_parallels(sp), apex_offset_from_parallels(sp), delta,
                     lambda0, oriented.hemisphere};
  params.validate();
  return params;
}

BoundsDerivation params_from_bounds(const RegionBounds& rb, Solver solver, double delta,
                                    Angle lambda0) {
  const auto oriented = orient(rb);
  const double omega = omega_between(oriented.a, oriented.b);
  BoundsDerivation out{{omega, {}, delta, lambda0, oriented.hemisphere}, solver, {}, false};

  if (omega <= 1.0) {
    out.x_star = Angle::radians(std::asin(omega));
    if (oriented.hemisphere == Hemisphere::south) out.x_star = -out.x_star;
  }
  if (solver == Solver::refined && omega <= 1.0) {
    out.params.z = refined_z(oriented.a, Angle::radians(std::asin(omega)), omega);
  } else {
    out.fell_back = solver == Solver::refined;
    out.solver_used = Solver::midpoint;
    out.params.z = midpoint_z(oriented.a, oriented.b, omega);
  }
  out.params.validate();
  return out;
}

}  // namespace delisle
