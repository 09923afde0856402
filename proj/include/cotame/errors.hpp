#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cotame {

enum class ErrorKind {
  SpaceMismatch,
  ArityMismatch,
  ZeroPolynomial,
  DivisionByZero,
  ExponentOverflow,
  ParseError,
  ValidationError,
  ExpDiverged,
  NotInKernel,
  BadDimension,
  BadParameter,
  ZeroScalar,
  ZeroVector,
  WrongKind,
  NoInverseAvailable,
  AffineInput,
  ResourceLimit,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this type; `kind()` is the
/// machine-readable part, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& detail);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

}  // namespace cotame
