#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphclust {

/// Base for every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input values (negative or non-finite weights, bad coordinates).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

class UnknownVertexError : public Error {
 public:
  using Error::Error;
};

class IncompletePartitionError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A caller violated an operation's contract (invalid partition, missing baseline, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Operation-specific precondition failed (e.g. delta modularity on a non-isolated vertex).
class PreconditionError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Modularity is undefined when the graph carries no weight.
class UndefinedModularityError : public Error {
 public:
  using Error::Error;
};

class RefinementError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphclust
