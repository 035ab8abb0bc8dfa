#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace urbanveg {

enum class ErrorCode {
  kValidation,
  kParameterRange,
  kParse,
  kConfig,
  kNoSample,
  kIo,
};

/// Machine-readable name of an error code, e.g. "parameter_out_of_range".
std::string_view to_string(ErrorCode code);

/// Base of every error the engine raises. Carries a stable code and,
/// when applicable, the name of the offending field or ring.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string field, const std::string& message)
      : std::runtime_error(message), code_(code), field_(std::move(field)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error(ErrorCode::kValidation, std::move(field), message) {}
};

class ParameterRangeError : public Error {
 public:
  ParameterRangeError(std::string field, double value, double lo, double hi);
  ParameterRangeError(std::string field, const std::string& message)
      : Error(ErrorCode::kParameterRange, std::move(field), message) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& message)
      : Error(ErrorCode::kParse, std::move(where), message) {}
};

class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(ErrorCode::kConfig, std::move(field), message) {}
};

class NoSampleError : public Error {
 public:
  explicit NoSampleError(const std::string& message)
      : Error(ErrorCode::kNoSample, "", message) {}
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& message)
      : Error(ErrorCode::kIo, std::move(path), message) {}
};

}  // namespace urbanveg
