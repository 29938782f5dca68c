#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simtri {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (out-of-range vertex, eps <= 0, ...).
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// Input exceeds a hard size bound (embedder r > 12, Turán n guard).
class SizeError : public Error {
  public:
    using Error::Error;
};

/// A requested geometric construction does not exist (e.g. disphenoid on a right triangle).
class InfeasibleError : public Error {
  public:
    using Error::Error;
};

/// The operation needs at least one edge.
class NoEdgeError : public Error {
  public:
    using Error::Error;
};

/// Malformed text input. Carries the 1-based line number of the offending line (0 if unknown).
class ParseError : public Error {
  public:
    ParseError(std::string source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what),
          source_(std::move(source)),
          line_(line) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

  private:
    std::string source_;
    std::size_t line_;
};

} // namespace simtri
