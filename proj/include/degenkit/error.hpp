#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace degenkit {

enum class ErrorCode {
  Parse,
  DivisionByZero,
  Pole,
  Singular,
  NotLaurent,
  IndexOutOfRange,
  SymmetryConflict,
  AmbientMismatch,
  DimensionMismatch,
  DimensionTooLarge,
  DimensionConstraint,
  ParameterDomain,
  UnknownName,
  UnknownWitness,
  NotIdempotent,
  IncompleteSplit,
  Io,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. `where` carries an optional index
/// tuple (1-based), e.g. the (i, j, k) of the structure constant with a pole.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<int> where = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        where_(std::move(where)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& where() const noexcept { return where_; }

 private:
  ErrorCode code_;
  std::vector<int> where_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::Pole: return "Pole";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotLaurent: return "NotLaurent";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SymmetryConflict: return "SymmetryConflict";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::DimensionConstraint: return "DimensionConstraint";
    case ErrorCode::ParameterDomain: return "ParameterDomain";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UnknownWitness: return "UnknownWitness";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::IncompleteSplit: return "IncompleteSplit";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace degenkit
