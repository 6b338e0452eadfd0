#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace waring {

enum class ErrorKind {
  InvalidPoint,
  InvalidInstance,
  DimensionError,
  InvalidPartition,
  UnsupportedDegree,
  LengthOutOfRange,
  ZeroCoefficient,
  DuplicatePoint,
  EmptyPointSet,
  InvalidRequest,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace waring
