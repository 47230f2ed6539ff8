#pragma once

#include <cmath>
#include <compare>
#include <numbers>
#include <string>
#include <string_view>

namespace delisle {

/// One degree in radians. The only degree/radian conversion factor in the
/// library; every trigonometric call goes through Angle::radians().
inline constexpr double kAlpha = std::numbers::pi / 180.0;

/**
 * An angle carried in decimal degrees.
 *
 * Latitudes, longitudes, apex offsets and meridian arcs all use this type.
 * No range is enforced here; consumers check latitude ranges themselves.
 */
class Angle {
 public:
  constexpr Angle() = default;

  static constexpr Angle degrees(double deg) noexcept { return Angle(deg); }
  static constexpr Angle radians(double rad) noexcept { return Angle(rad / kAlpha); }

  constexpr double deg() const noexcept { return deg_; }
  constexpr double rad() const noexcept { return deg_ * kAlpha; }

  double sin() const { return std::sin(rad()); }
  double cos() const { return std::cos(rad()); }

  constexpr Angle operator-() const noexcept { return Angle(-deg_); }
  constexpr Angle& operator+=(Angle o) noexcept { deg_ += o.deg_; return *this; }
  constexpr Angle& operator-=(Angle o) noexcept { deg_ -= o.deg_; return *this; }
  friend constexpr Angle operator+(Angle a, Angle b) noexcept { return a += b; }
  friend constexpr Angle operator-(Angle a, Angle b) noexcept { return a -= b; }
  friend constexpr Angle operator*(Angle a, double k) noexcept { return Angle(a.deg_ * k); }
  friend constexpr Angle operator*(double k, Angle a) noexcept { return Angle(a.deg_ * k); }
  friend constexpr Angle operator/(Angle a, double k) noexcept { return Angle(a.deg_ / k); }

  friend constexpr auto operator<=>(Angle, Angle) = default;

 private:
  constexpr explicit Angle(double deg) noexcept : deg_(deg) {}
  double deg_ = 0.0;
};

namespace literals {
constexpr Angle operator""_deg(long double d) { return Angle::degrees(static_cast<double>(d)); }
constexpr Angle operator""_deg(unsigned long long d) { return Angle::degrees(static_cast<double>(d)); }
}  // namespace literals

enum class DmsPrecision { minute, second };

/// Sexagesimal rendering in the style D°M′S″. A zero degree field is dropped
/// for non-zero angles below one degree ("49′5″"); the sign covers the whole
/// triple.
std::string dms_format(Angle angle, DmsPrecision precision = DmsPrecision::second);

/// Parses `[-]D°[M′[S″]]` (any leading fields may be omitted, e.g. "49′6″")
/// or a plain decimal number of degrees. ASCII `d`, `'`, `"` are accepted as
/// alternatives to the typographic symbols. Throws Error{parse} for
/// malformed text and Error{range} for minutes or seconds >= 60.
Angle dms_parse(std::string_view text);

}  // namespace delisle
