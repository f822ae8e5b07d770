#ifndef KTSS_ERRORS_HPP
#define KTSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ktss {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A component word has the wrong length for its slot (prefix/suffix/segment/short).
struct LengthViolation : Error {
  using Error::Error;
};

/// Two vectors with different window sizes were combined.
struct KMismatch : Error {
  using Error::Error;
};

/// A materialization would exceed the configured size cap.
struct SizeGuardError : Error {
  using Error::Error;
};

/// A graph operation required canonical inputs and got junk.
struct NotCanonical : Error {
  using Error::Error;
};

/// A requested cluster count is out of range.
struct InvalidTarget : Error {
  using Error::Error;
};

/// Malformed external input (UTF-8, JSON documents, word files).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace ktss

#endif  // KTSS_ERRORS_HPP
