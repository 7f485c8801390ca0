#pragma once

#include <stdexcept>
#include <string>

namespace mmrec {

// Anything wrong with input data, configuration, or local files. The CLI maps
// this family to exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed record in a line-delimited stream. `line` is 1-based.
struct ParseError : DataError {
  ParseError(std::size_t line_no, const std::string& what)
      : DataError("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  std::size_t line;
};

struct DuplicateIdError : DataError {
  using DataError::DataError;
};

struct EmptyInputError : DataError {
  using DataError::DataError;
};

// Value outside its documented range (fraction not in (0,1), rating not in
// [1,5], epsilon <= 0, ...).
struct DomainError : DataError {
  using DataError::DataError;
};

struct ConfigError : DataError {
  using DataError::DataError;
};

// Vector/matrix dimensions do not line up.
struct ShapeError : DataError {
  using DataError::DataError;
};

// Training data that cannot be learned from (e.g. a single-class label set).
struct DegenerateDataError : DataError {
  using DataError::DataError;
};

struct IoError : DataError {
  using DataError::DataError;
};

// Remote enrichment failure (transport, retries exhausted, bad response).
// The CLI maps this to exit code 3.
struct ProviderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Remote provider answered but violated the wire contract (wrong embedding
// dimension, missing fields).
struct ProtocolError : ProviderError {
  using ProviderError::ProviderError;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mmrec
