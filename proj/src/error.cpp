#include "delisle/error.hpp"

namespace delisle {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::degenerate_cone: return "degenerate cone";
    case ErrorKind::degenerate_region: return "degenerate region";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::no_interior_maximum: return "no interior maximum";
    case ErrorKind::beyond_apex: return "at or beyond apex";
    case ErrorKind::apex_singularity: return "apex singularity";
    case ErrorKind::out_of_cone: return "out of cone";
    case ErrorKind::pole_degeneracy: return "pole degeneracy";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::range: return "range error";
    case ErrorKind::empty_geometry: return "empty geometry";
    case ErrorKind::io: return "i/o error";
  }
  return "unknown";
}

}  // namespace delisle
