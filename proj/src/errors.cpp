#include "cotame/errors.hpp"

namespace cotame {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::ExpDiverged: return "ExpDiverged";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ZeroScalar: return "ZeroScalar";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::WrongKind: return "WrongKind";
    case ErrorKind::NoInverseAvailable: return "NoInverseAvailable";
    case ErrorKind::AffineInput: return "AffineInput";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

namespace {

std::string describe_parse(std::size_t position, const std::vector<std::string>& expected,
                           const std::string& detail) {
  std::string out = detail + " at position " + std::to_string(position);
  if (!expected.empty()) {
    out += "; expected one of:";
    for (const auto& e : expected) out += " " + e;
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& detail)
    : Error(ErrorKind::ParseError, describe_parse(position, expected, detail)),
      position_(position),
      expected_(std::move(expected)) {}

void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace cotame
