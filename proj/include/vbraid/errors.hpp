#pragma once

#include <stdexcept>
#include <string>

namespace vbraid {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

enum class ParseCode { UnknownToken, EmptyIndex, IndexOutOfRange, Malformed };

struct ParseError : Error {
  ParseCode code;
  ParseError(ParseCode c, const std::string &msg) : Error(msg), code(c) {}
};

struct StrandCountMismatch : Error {
  using Error::Error;
};
struct NotPure : Error {
  using Error::Error;
};
struct InapplicableSite : Error {
  using Error::Error;
};
struct PatternMismatch : Error {
  using Error::Error;
};
struct MalformedRotation : Error {
  using Error::Error;
};
struct AmbiguousDistinguished : Error {
  using Error::Error;
};

}  // namespace vbraid
