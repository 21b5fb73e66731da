#pragma once

#include <stdexcept>
#include <string>

namespace frobrig {

/// Failure categories shared by every engine module. The numeric values are
/// mirrored by the C API status codes in frobrig.h.
enum class ErrorCode {
  Parse = 1,
  InvalidArgument = 2,
  ZeroRing = 3,
  CapTooSmall = 4,
  NotArtinian = 5,
  CapUnstable = 6,
  ContainmentViolation = 7,
  NotRegular = 8,
  PositiveDepth = 9,
  NotApplicable = 10,
  Io = 11,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in a presentation. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace frobrig
