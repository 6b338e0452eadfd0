#include "waring/error.hpp"

namespace waring {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::LengthOutOfRange: return "LengthOutOfRange";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::EmptyPointSet: return "EmptyPointSet";
    case ErrorKind::InvalidRequest: return "InvalidRequest";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace waring
