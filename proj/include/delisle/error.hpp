#pragma once

#include <stdexcept>
#include <string>

namespace delisle {

enum class ErrorKind {
  degenerate_cone,
  degenerate_region,
  invalid_argument,
  no_interior_maximum,
  beyond_apex,
  apex_singularity,
  out_of_cone,
  pole_degeneracy,
  parse,
  range,
  empty_geometry,
  io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace delisle
