#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prl {

/// Base of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation contract (dimension mismatch, null span, ...).
struct ContractError : Error {
  using Error::Error;
};

/// Mathematically invalid input: Jacobi failure, asymmetric Gram matrix,
/// degenerate form where nondegeneracy is required, bad construction parameters.
struct InvalidInput : Error {
  using Error::Error;
};

/// Text could not be parsed; `line` is 1-based, 0 when unknown.
struct ParseError : InvalidInput {
  ParseError(int line_no, const std::string& what)
      : InvalidInput(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
        line(line_no) {}
  int line;
};

/// An operation's mathematical precondition does not hold (e.g. decomposing a
/// non-Riemann-Lie instance). The message names the failed check.
struct PreconditionError : Error {
  using Error::Error;
};

/// An enumeration would exceed the configured ceiling.
struct LimitError : Error {
  LimitError(std::uint64_t required_count, const std::string& what)
      : Error(what), required(required_count) {}
  std::uint64_t required;
};

/// A proved invariant failed at runtime. Always a bug, never user error.
struct InternalBug : Error {
  using Error::Error;
};

}  // namespace prl
