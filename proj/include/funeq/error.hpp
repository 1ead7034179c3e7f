#pragma once

#include <stdexcept>
#include <string>

namespace funeq {

struct FuneqError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : FuneqError {
  DivisionByZero() : FuneqError("division by zero") {}
  explicit DivisionByZero(const std::string& what) : FuneqError(what) {}
};

struct TowerMismatch : FuneqError {
  TowerMismatch() : FuneqError("operands belong to different towers") {}
};

struct SingularSubstitution : FuneqError {
  explicit SingularSubstitution(const std::string& what) : FuneqError(what) {}
};

struct InseparableExtension : FuneqError {
  explicit InseparableExtension(const std::string& what) : FuneqError(what) {}
};

struct ParseError : FuneqError {
  std::size_t pos;
  ParseError(const std::string& what, std::size_t p)
      : FuneqError(what + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

}  // namespace funeq
