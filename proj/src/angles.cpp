#include "delisle/angles.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <optional>

#include "delisle/error.hpp"

namespace delisle {

namespace {

constexpr std::string_view kDegree = "°";
constexpr std::string_view kOrdinal = "º";  // common stand-in for the degree sign
constexpr std::string_view kPrime = "′";
constexpr std::string_view kDoublePrime = "″";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// 0 = degrees, 1 = minutes, 2 = seconds; consumes the unit symbol.
std::optional<int> take_unit(std::string_view& s) {
  struct Symbol {
    std::string_view text;
    int field;
  };
  static constexpr std::array<Symbol, 8> symbols{{
      {kDegree, 0}, {kOrdinal, 0}, {"d", 0},
      {kDoublePrime, 2}, {"''", 2}, {"\"", 2},
      {kPrime, 1}, {"'", 1},
  }};
  for (const auto& sym : symbols) {
    if (s.starts_with(sym.text)) {
      s.remove_prefix(sym.text.size());
      return sym.field;
    }
  }
  return std::nullopt;
}

[[noreturn]] void fail_at(std::string_view text, std::string_view rest, std::string_view why) {
  const auto pos = text.size() - rest.size();
  std::string token(rest.substr(0, rest.find_first_of(" \t")));
  if (token.empty()) token = "<end>";
  throw Error(ErrorKind::parse, std::string(why) + " at '" + token + "' (offset " +
                                    std::to_string(pos) + ") in angle '" + std::string(text) + "'");
}

}  // namespace

std::string dms_format(Angle angle, DmsPrecision precision) {
  const double per_degree = precision == DmsPrecision::second ? 3600.0 : 60.0;
  const auto units = static_cast<std::int64_t>(std::llround(std::abs(angle.deg()) * per_degree));
  const bool negative = angle.deg() < 0 && units != 0;

  std::int64_t deg = 0, min = 0, sec = 0;
  if (precision == DmsPrecision::second) {
    deg = units / 3600;
    min = (units % 3600) / 60;
    sec = units % 60;
  } else {
    deg = units / 60;
    min = units % 60;
  }

  std::string out = negative ? "-" : "";
  if (deg != 0 || units == 0) out += std::to_string(deg) + std::string(kDegree);
  out += std::to_string(min) + std::string(kPrime);
  if (precision == DmsPrecision::second) out += std::to_string(sec) + std::string(kDoublePrime);
  return out;
}

Angle dms_parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorKind::parse, "empty angle text");

  double sign = 1.0;
  if (s.front() == '-' || s.front() == '+') {
    if (s.front() == '-') sign = -1.0;
    s.remove_prefix(1);
  }

  std::array<double, 3> fields{0.0, 0.0, 0.0};
  int last_field = -1;
  bool any_unit = false;

  while (!s.empty()) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr == s.data()) fail_at(text, s, "expected a number");
    if (value < 0) fail_at(text, s, "sign inside a sexagesimal component");
    std::string_view rest = s.substr(static_cast<std::size_t>(ptr - s.data()));

    std::string_view before_unit = rest;
    const auto unit = take_unit(rest);
    if (!unit) {
      // A bare number is only valid as the whole text (plain decimal degrees).
      if (any_unit || !trim(rest).empty()) fail_at(text, before_unit, "unexpected token");
      return Angle::degrees(sign * value);
    }
    if (*unit <= last_field) fail_at(text, before_unit, "sexagesimal component out of order");
    if (*unit > 0 && value >= 60.0) {
      throw Error(ErrorKind::range, std::string(*unit == 1 ? "minutes" : "seconds") +
                                        " must be below 60 in angle '" + std::string(text) + "'");
    }
    fields[static_cast<std::size_t>(*unit)] = value;
    last_field = *unit;
    any_unit = true;
    s = trim(rest);
  }

  return Angle::degrees(sign * (fields[0] + fields[1] / 60.0 + fields[2] / 3600.0));
}

}  // namespace delisle
