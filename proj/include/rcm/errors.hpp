#ifndef RCM_ERRORS_HPP
#define RCM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rcm {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid arguments or configuration (CLI exit code 1).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& msg) : Error(msg) {}
};

/// A computation produced a non-finite or otherwise unusable value
/// (CLI exit code 2).
class EvaluationError : public Error {
 public:
  explicit EvaluationError(const std::string& msg) : Error(msg) {}
};

/// Malformed input documents; names the offending field.
class IngestionError : public ParameterError {
 public:
  explicit IngestionError(const std::string& msg) : ParameterError(msg) {}
};

}  // namespace rcm

#endif
