// Exception types shared by every ctxdrt module.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctxdrt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverlappingUniverses : Error {
  explicit OverlappingUniverses(std::string referent)
      : Error("overlapping universes: referent '" + referent + "' introduced twice"),
        referent(std::move(referent)) {}
  std::string referent;
};

struct InvalidPath : Error {
  using Error::Error;
};

struct BoundReferent : Error {
  explicit BoundReferent(std::string referent)
      : Error("referent '" + referent + "' is bound inside the DRS"), referent(std::move(referent)) {}
  std::string referent;
};

struct NotAnAlpha : Error {
  using Error::Error;
};

struct NotAccommodatable : Error {
  using Error::Error;
};

struct NoAdmissibleReading : Error {
  using Error::Error;
};

struct AlphaRemaining : Error {
  AlphaRemaining() : Error("formula still contains an alpha condition") {}
};

struct ResourceLimit : Error {
  using Error::Error;
};

struct ImpureInput : Error {
  using Error::Error;
};

// Byte offsets into the parsed text, half-open.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

struct ParseError : Error {
  ParseError(std::string message, SourceSpan span, std::vector<std::string> expected)
      : Error(std::move(message)), span(span), expected(std::move(expected)) {}
  SourceSpan span;
  std::vector<std::string> expected;
};

}  // namespace ctxdrt
