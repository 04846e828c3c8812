#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace braket {

// Byte range [start, end) into a source string.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  bool operator==(const SourceSpan&) const = default;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InvalidLabel : Error {
  using Error::Error;
};

// Workspace file errors carry a 1-based line number.
struct ParseError : Error {
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

struct MissingDim : ParseError {
  explicit MissingDim(int line)
      : ParseError(line, "expected 'dim <n>' before the first binding") {}
};

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, SourceSpan span)
      : Error(msg + " at " + std::to_string(span.start) + ".." +
              std::to_string(span.end)),
        span(span) {}
  SourceSpan span;
};

struct AlternationViolation : Error {
  explicit AlternationViolation(const std::string& msg) : Error(msg) {}
  AlternationViolation(const std::string& msg, SourceSpan s)
      : Error(msg + " at " + std::to_string(s.start) + ".." +
              std::to_string(s.end)),
        span(s) {}
  std::optional<SourceSpan> span;  // set when raised by the parser
};

struct NotAKet : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct UnboundLabel : Error {
  explicit UnboundLabel(const std::string& label)
      : Error("unbound label '" + label + "'"), label(label) {}
  std::string label;
};

struct UnresolvedMarking : Error {
  using Error::Error;
};

struct IncompatibleKinds : Error {
  IncompatibleKinds(const std::string& lhs, const std::string& rhs)
      : Error("incompatible value kinds: " + lhs + " * " + rhs),
        lhs(lhs),
        rhs(rhs) {}
  std::string lhs, rhs;
};

struct NotAFunction : Error {
  using Error::Error;
};

struct DomainMismatch : Error {
  using Error::Error;
};

}  // namespace braket
