#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hyperspec {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad document, missing key, wrong shape, out-of-range
// values, empty hypersum cells. `code` is the stable diagnostic identifier
// (MALFORMED, MISSING_KEY, BAD_SHAPE, EMPTY_HYPERSUM, OUT_OF_RANGE,
// BAD_VALUE, OVER_CAP); `where` points at the offending key or cell.
struct FormatError : Error {
  std::string code;
  std::string where;
  FormatError(std::string code_, std::string where_, const std::string& msg)
      : Error(code_ + " at " + (where_.empty() ? "<document>" : where_) + ": " + msg),
        code(std::move(code_)),
        where(std::move(where_)) {}
};

// An operation was called outside its contract (empty operand, non-ideal
// argument, non-open subset, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// maximal_above and friends require a proper ideal.
struct NotProperError : PreconditionError {
  using PreconditionError::PreconditionError;
};

// A consistency guard that can only fire on an engine bug fired.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace hyperspec
